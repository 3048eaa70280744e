"""
Points of the projective line RP = R ∪ {∞}.

A finite point is any exact scalar; the point at infinity is the singleton `INF`.
The positive orientation of the circle is increasing t on R, closed up through ∞.
"""
from fractions import Fraction

from projline.exceptions.all import NonDistinctPointsError, ScalarParseError
from projline.numfield.scalar import as_scalar, format_scalar, is_scalar


class Infinity:
    """The point ∞ of the projective line."""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("projline.INF")

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()


def is_infinity(p) -> bool:
    return p is INF


def as_point(value):
    """
    Reads a point: "inf" / "∞" / `INF`, or anything `as_scalar` accepts.

    Raises:
        ScalarParseError: If the value is neither.
    """
    if value is INF:
        return INF
    if isinstance(value, str) and value.strip().lower() in {"inf", "infinity", "∞"}:
        return INF
    if is_scalar(value) or isinstance(value, (str, dict)):
        return as_scalar(value)
    raise ScalarParseError(f"Not a point of the projective line: {value!r}.")


def circle_key(p) -> tuple:
    """Sort key: finite points increasing, then ∞."""
    return (1, Fraction(0)) if p is INF else (0, p)


def arc_position(p, base) -> tuple:
    """
    Sort key of p along the positive circle starting just after `base`.

    `base` itself sorts first; then come the points encountered when moving in the
    positive direction from base until returning to it.
    """
    if p == base:
        return (-1, Fraction(0))
    if base is INF:
        return (0, p)
    if p is INF:
        return (1, Fraction(0))
    if p > base:
        return (0, p)
    return (2, p)


def cyclic_order(a, b, c) -> bool:
    """
    True iff b lies on the positively oriented arc from a to c.

    Raises:
        NonDistinctPointsError: If two of the points coincide.
    """
    if a == b or b == c or a == c:
        raise NonDistinctPointsError(f"Points {a}, {b}, {c} are not pairwise distinct.")
    return arc_position(b, a) < arc_position(c, a)


def in_open_arc(p, start, end) -> bool:
    """
    True iff p lies strictly inside the positive arc from start to end.

    start == end denotes the whole circle minus that point.
    """
    if p == start or p == end:
        return False
    if start == end:
        return True
    return arc_position(p, start) < arc_position(end, start)


def in_closed_arc(p, start, end) -> bool:
    return p == start or p == end or in_open_arc(p, start, end)


def format_point(p, digits: int = None) -> str:
    return "inf" if p is INF else format_scalar(p, digits)
