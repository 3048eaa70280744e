"""
Fixed sets, supports, linked pairs of fixed points and germs at ∞ of piecewise maps.
"""
import csv
import io

from fractions import Fraction

from projline.exceptions.all import (
    DoesNotFixInfinityError,
    HomeoError,
    IdentityInputError,
    PointNotFixedError,
)
from projline.moebius import INF, arc_position, as_point, circle_key, format_point, identity, in_closed_arc, in_open_arc
from projline.numfield import scalar
from projline.pwhomeo.arcs import FULL_CIRCLE, AffineGerm, Arc, LinkedConfig
from projline.pwhomeo.homeo import PwProjMap

PLUS = "plus"

MINUS = "minus"


def _as_arc(value) -> Arc:
    if isinstance(value, Arc):
        return value
    start, end = value
    return Arc(as_point(start), as_point(end))


def fixed_set(f: PwProjMap) -> list:
    """
    Fixed set of f as isolated points and closed arcs, in circle order.

    Identity pieces contribute their closed arcs; other pieces contribute the fixed
    points of their Möbius map lying in their half-open arc. Points on the boundary
    of a fixed arc are absorbed into it.
    """
    if f.is_identity():
        return [FULL_CIRCLE]

    arcs, points = [], []
    for piece in f.pieces():
        start, end = piece.arc.start, piece.arc.end
        if piece.map.is_identity():
            arcs.append(Arc(start, end, closed=True))
            continue
        for x in piece.map.fixed_points():
            if start == end or x == start or in_open_arc(x, start, end):
                points.append(x)

    points = [x for x in points if not any(x == a.start or x == a.end for a in arcs)]
    components = arcs + points
    components.sort(key=lambda c: circle_key(c.start if isinstance(c, Arc) else c))
    return components


def support(f: PwProjMap) -> list:
    """
    Open arcs making up the complement of the fixed set.

    A fixed-point free map has the whole circle as support, reported as `FULL_CIRCLE`.
    A map with a single fixed point p has the open arc (p, p), the circle minus p.
    """
    components = fixed_set(f)
    if components == [FULL_CIRCLE]:
        return []
    if not components:
        return [FULL_CIRCLE]

    bounds = [(c.start, c.end) if isinstance(c, Arc) else (c, c) for c in components]
    arcs = []
    for (_, last), (first, _) in zip(bounds, bounds[1:] + bounds[:1]):
        arcs.append(Arc(last, first))
    return arcs


def successive_fixed_pairs(f: PwProjMap) -> list:
    """
    Pairs (a, b) of fixed points bounding a component (a, b) of the support.

    Raises:
        IdentityInputError: If f is the identity.
    """
    if f.is_identity():
        raise IdentityInputError("The identity has no successive fixed points.")
    return [(arc.start, arc.end) for arc in support(f) if arc != FULL_CIRCLE]


def linked_pairs(f: PwProjMap, g: PwProjMap) -> list:
    """
    Linked configurations between the successive fixed pairs of f and of g.

    (a, b) of f and (c, d) of g are linked when {a, b} ∩ (c, d) or (a, b) ∩ {c, d} is
    a single point. When both are, the configuration is flagged `doubly_linked`.

    Raises:
        IdentityInputError: If f or g is the identity.
    """
    f_pairs, g_pairs = successive_fixed_pairs(f), successive_fixed_pairs(g)
    configs = []
    for a, b in f_pairs:
        for c, d in g_pairs:
            f_in_g = tuple(x for x in dict.fromkeys((a, b)) if in_open_arc(x, c, d))
            g_in_f = tuple(x for x in dict.fromkeys((c, d)) if in_open_arc(x, a, b))
            if len(f_in_g) == 1 or len(g_in_f) == 1:
                doubly = len(f_in_g) == 1 and len(g_in_f) == 1
                configs.append(LinkedConfig((a, b), (c, d), f_in_g, g_in_f, doubly))
    return configs


def germ_at(f: PwProjMap, side: str) -> AffineGerm:
    """
    Affine germ of f at +∞ (large positive t) or -∞ (large negative t).

    Args:
        side (str): "plus" or "minus".

    Raises:
        DoesNotFixInfinityError: If f moves ∞.
    """
    if not f.fixes_infinity():
        raise DoesNotFixInfinityError(f"Map sends inf to {format_point(f(INF))}.")
    if side == PLUS:
        return AffineGerm.from_moebius(f.piece_map_left_of(INF))
    if side == MINUS:
        return AffineGerm.from_moebius(f.piece_map_at(INF))
    raise HomeoError(f"Side must be '{PLUS}' or '{MINUS}', got {side!r}.")


def has_compact_support(f: PwProjMap) -> bool:
    """True iff f is the identity near ∞ on both sides."""
    return (
        f.fixes_infinity()
        and f.piece_map_left_of(INF).is_identity()
        and f.piece_map_at(INF).is_identity()
    )


def is_identity_outside(f: PwProjMap, arc) -> bool:
    """True iff the support of f lies inside the open arc."""
    arc = _as_arc(arc)
    start, end = arc.start, arc.end
    if f.is_identity():
        return True
    if start == end:
        return f(start) == start

    for piece in support(f):
        if piece.start == piece.end:
            return False
        if not (in_closed_arc(piece.start, start, end) and piece.start != end):
            return False
        if not (in_closed_arc(piece.end, start, end) and piece.end != start):
            return False
        if arc_position(piece.start, start) >= arc_position(piece.end, start):
            return False
    return True


def split_at_fixed_point(f: PwProjMap, p) -> PwProjMap:
    """
    The map equal to the identity on [∞, p] and to f on [p, ∞].

    Raises:
        PointNotFixedError: If p is ∞ or f(p) ≠ p.
        DoesNotFixInfinityError: If f moves ∞.
    """
    p = as_point(p)
    if p is INF:
        raise PointNotFixedError("The split point must be finite.")
    if not f.fixes_infinity():
        raise DoesNotFixInfinityError(f"Map sends inf to {format_point(f(INF))}.")
    if f(p) != p:
        raise PointNotFixedError(f"Map sends {format_point(p)} to {format_point(f(p))}.")

    inner = [s for s in f.breakpoints() if s is not INF and s > p]
    starts = [p] + inner + [INF]
    maps = [f.piece_map_at(s) for s in [p] + inner] + [identity()]
    return PwProjMap(starts, maps)


def restrict_agrees(f: PwProjMap, g: PwProjMap, arc) -> bool:
    """True iff f and g agree on the closed arc."""
    arc = _as_arc(arc)
    start, end = arc.start, arc.end
    if start == end:
        return f == g
    cuts = [start] + [b for b in f.breakpoints() + g.breakpoints() if in_open_arc(b, start, end)]
    return all(f.piece_map_at(s) == g.piece_map_at(s) for s in cuts)


def sample(f: PwProjMap, n: int, lo, hi, digits: int = None) -> str:
    """
    CSV text with header "t,F(t)" and n rows at equally spaced t in [lo, hi].

    ∞ is written as "inf".
    """
    lo, hi = scalar.as_scalar(lo), scalar.as_scalar(hi)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["t", "F(t)"])
    for k in range(n):
        t = lo if n == 1 else scalar.as_scalar(lo + (hi - lo) * Fraction(k, n - 1))
        writer.writerow([format_point(t, digits), format_point(f(t), digits)])
    return buffer.getvalue()
