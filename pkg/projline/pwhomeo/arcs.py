"""
Small value types shared by the piecewise maps: arcs, pieces, affine germs and linked
configurations.
"""
from fractions import Fraction
from typing import NamedTuple

from projline.moebius import INF, MoebiusMap, format_point, in_closed_arc, in_open_arc
from projline.numfield import scalar


class Arc(NamedTuple):
    """
    Positively oriented arc of the circle from `start` to `end`.

    When start == end the arc goes all the way round: a closed arc is then the whole
    circle and an open one is the circle minus that point.
    """
    start: object
    end: object
    closed: bool = False

    def contains(self, p) -> bool:
        if self.closed and self.start == self.end:
            return True
        if self.closed:
            return in_closed_arc(p, self.start, self.end)
        return in_open_arc(p, self.start, self.end)

    def __str__(self):
        left, right = ("[", "]") if self.closed else ("(", ")")
        return f"{left}{format_point(self.start)}, {format_point(self.end)}{right}"


FULL_CIRCLE = Arc(INF, INF, closed=True)


class Piece(NamedTuple):
    """A Möbius map restricted to the half-open arc [arc.start, arc.end)."""
    arc: Arc
    map: MoebiusMap


class AffineGerm(NamedTuple):
    """Germ t ↦ slope·t + intercept of a map fixing ∞."""
    slope: object
    intercept: object

    @classmethod
    def identity(cls) -> "AffineGerm":
        return cls(Fraction(1), Fraction(0))

    @classmethod
    def from_moebius(cls, m: MoebiusMap) -> "AffineGerm":
        return cls(scalar.as_scalar(m.a / m.d), scalar.as_scalar(m.b / m.d))

    def compose(self, other: "AffineGerm") -> "AffineGerm":
        """self ∘ other."""
        return AffineGerm(
            scalar.as_scalar(self.slope * other.slope),
            scalar.as_scalar(self.slope * other.intercept + self.intercept),
        )

    def inverse(self) -> "AffineGerm":
        return AffineGerm(
            scalar.as_scalar(1 / self.slope),
            scalar.as_scalar(-self.intercept / self.slope),
        )

    def is_identity(self) -> bool:
        return self.slope == 1 and self.intercept == 0

    def __str__(self):
        return f"t -> {scalar.format_scalar(self.slope)}*t + {scalar.format_scalar(self.intercept)}"


class LinkedConfig(NamedTuple):
    """
    Successive fixed pairs (a, b) of F and (c, d) of G whose arcs cross.

    `f_in_g` holds the points of {a, b} inside (c, d) and `g_in_f` the points of
    {c, d} inside (a, b).
    """
    f_pair: tuple
    g_pair: tuple
    f_in_g: tuple
    g_in_f: tuple
    doubly_linked: bool

    def mirror(self) -> "LinkedConfig":
        return LinkedConfig(self.g_pair, self.f_pair, self.g_in_f, self.f_in_g, self.doubly_linked)
