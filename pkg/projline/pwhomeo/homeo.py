"""
Piecewise projective homeomorphisms of the circle RP = R ∪ {∞}.

A map is stored as its breakpoints `starts` (sorted finite-first, then ∞) and one Möbius
map per breakpoint. The map `maps[i]` acts on the half-open arc [starts[i], starts[i+1]),
the last arc wrapping round to starts[0]. A map with no breakpoints is a single Möbius
map, stored with start ∞.
"""
import bisect

from projline.exceptions.all import (
    ContinuityViolation,
    InjectivityViolation,
    NonPartitionError,
    ScalarParseError,
)
from projline.logging import logger
from projline.moebius import (
    INF,
    MoebiusMap,
    arc_position,
    as_moebius,
    as_point,
    circle_key,
    format_point,
    identity,
)
from projline.pwhomeo.arcs import Arc, Piece


class PwProjMap:
    """
    Orientation preserving homeomorphism of the circle which is Möbius on finitely many arcs.

    Instances are immutable and always normalized: adjacent pieces carry different maps,
    so every stored start is a genuine breakpoint.

    Example:

    ```py
    a_plus = PwProjMap.build([
        (INF, 0, identity()),
        (0, INF, scaling(2)),
    ])
    a_plus(3)             # Fraction(6, 1)
    a_plus.breakpoints()  # [Fraction(0, 1), INF]
    ```
    """
    __slots__ = ("starts", "maps", "_keys")

    def __init__(self, starts: tuple, maps: tuple):
        """
        Trusted constructor, use `build` for unchecked data.

        Args:
            starts (tuple): Breakpoints sorted by `circle_key`.
            maps (tuple): One `MoebiusMap` per breakpoint.
        """
        self.starts, self.maps = _normalize(tuple(starts), tuple(maps))
        self._keys = [circle_key(s) for s in self.starts]

    @classmethod
    def build(cls, pieces) -> "PwProjMap":
        """
        Validates and normalizes piece data.

        Args:
            pieces: Iterable of `Piece`, (start, end, map) triples or {"from", "to", "m"}
                mappings. Maps may be given as `MoebiusMap` or [[a, b], [c, d]].

        Raises:
            NonPartitionError: If the arcs do not partition the circle.
            ContinuityViolation: If two adjacent pieces disagree at their common endpoint.
            InjectivityViolation: If the images of the arcs overlap.
            OrientationViolation: If a matrix has negative determinant.
        """
        triples = sorted((_read_piece(p) for p in pieces), key=lambda t: circle_key(t[0]))
        if not triples:
            raise NonPartitionError("A piecewise map needs at least one piece.")

        if len(triples) == 1:
            start, end, m = triples[0]
            if start != end:
                raise NonPartitionError(f"A single piece must cover the whole circle, got {Arc(start, end)}.")
            return cls((INF,), (m,))

        for (start, end, _), (next_start, _, _) in zip(triples, triples[1:] + triples[:1]):
            if start == end:
                raise NonPartitionError(f"Piece starting at {format_point(start)} covers the whole circle.")
            if end != next_start:
                raise NonPartitionError(
                    f"Arc ending at {format_point(end)} is followed by one starting at {format_point(next_start)}."
                )

        starts = tuple(t[0] for t in triples)
        maps = tuple(t[2] for t in triples)
        for i, point in enumerate(starts):
            left, right = maps[i - 1], maps[i]
            if left(point) != right(point):
                raise ContinuityViolation(
                    f"Pieces disagree at {format_point(point)}: {format_point(left(point))} "
                    f"from the left, {format_point(right(point))} from the right.",
                    point=point,
                )

        images = [m(s) for s, m in zip(starts, maps)]
        if len(set(images)) != len(images):
            raise InjectivityViolation("Two breakpoints have the same image.")

        positions = [arc_position(y, images[0]) for y in images]
        if any(p >= q for p, q in zip(positions, positions[1:])):
            raise InjectivityViolation("Images of the breakpoints are not in cyclic order.")

        return cls(starts, maps)

    @classmethod
    def from_moebius(cls, m: MoebiusMap) -> "PwProjMap":
        return cls((INF,), (m,))

    def _index_at(self, p) -> int:
        """Index of the piece whose half-open arc contains p."""
        return bisect.bisect_right(self._keys, circle_key(p)) - 1

    def _index_left_of(self, p) -> int:
        """Index of the piece acting just before p."""
        return bisect.bisect_left(self._keys, circle_key(p)) - 1

    def piece_map_at(self, p) -> MoebiusMap:
        """The Möbius map acting on [p, p + ε)."""
        return self.maps[self._index_at(as_point(p))]

    def piece_map_left_of(self, p) -> MoebiusMap:
        """The Möbius map acting on (p - ε, p]."""
        return self.maps[self._index_left_of(as_point(p))]

    def apply(self, p):
        p = as_point(p)
        return self.maps[self._index_at(p)](p)

    __call__ = apply

    def pieces(self) -> list:
        """Pieces with their arcs, in cyclic order."""
        if len(self.starts) == 1:
            return [Piece(Arc(INF, INF), self.maps[0])]
        ends = self.starts[1:] + self.starts[:1]
        return [Piece(Arc(s, e), m) for s, e, m in zip(self.starts, ends, self.maps)]

    def breakpoints(self) -> list:
        return [] if len(self.starts) == 1 else list(self.starts)

    def is_identity(self) -> bool:
        return len(self.maps) == 1 and self.maps[0].is_identity()

    def fixes_infinity(self) -> bool:
        return self.apply(INF) is INF

    def compose(self, other: "PwProjMap") -> "PwProjMap":
        """self ∘ other (other is applied first)."""
        cuts = set(other.breakpoints())
        cuts.update(other.inverse_apply(b) for b in self.breakpoints())
        if not cuts:
            return PwProjMap((INF,), (self.maps[0].compose(other.maps[0]),))

        starts = sorted(cuts, key=circle_key)
        maps = [self.piece_map_at(other(s)).compose(other.piece_map_at(s)) for s in starts]
        return PwProjMap(starts, maps)

    __matmul__ = compose

    def inverse(self) -> "PwProjMap":
        pairs = sorted(
            ((m(s), m.inverse()) for s, m in zip(self.starts, self.maps)),
            key=lambda pair: circle_key(pair[0]),
        )
        if len(pairs) == 1:
            return PwProjMap((INF,), (pairs[0][1],))
        return PwProjMap(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))

    def inverse_apply(self, p):
        """F⁻¹(p) without building the inverse."""
        p = as_point(p)
        images = [m(s) for s, m in zip(self.starts, self.maps)]
        # Image arcs [images[i], images[i+1]) are in cyclic order; pick the one holding p.
        for i, m in enumerate(self.maps):
            start, end = images[i], images[(i + 1) % len(images)]
            if len(images) == 1 or p == start or arc_position(p, start) < arc_position(end, start):
                return m.inverse()(p)
        raise InjectivityViolation(f"No piece maps onto {format_point(p)}.")

    def power(self, n: int) -> "PwProjMap":
        base = self if n >= 0 else self.inverse()
        result = identity_map()
        for _ in range(abs(n)):
            result = result.compose(base)
        return result

    def conjugate(self, g) -> "PwProjMap":
        """g ∘ self ∘ g⁻¹ for a `PwProjMap` or `MoebiusMap` g."""
        if isinstance(g, MoebiusMap):
            g = PwProjMap.from_moebius(g)
        return g.compose(self).compose(g.inverse())

    def one_sided_derivatives(self, p) -> tuple:
        """
        (left, right) derivatives at p, each from the piece acting on that side.

        At ∞ and at points sent to ∞ both sides are read in the chart s = -1/t.
        """
        p = as_point(p)
        return (
            self.piece_map_left_of(p).derivative_at(p),
            self.piece_map_at(p).derivative_at(p),
        )

    def one_sided_second_derivatives(self, p) -> tuple:
        p = as_point(p)
        return (
            self.piece_map_left_of(p).second_derivative_at(p),
            self.piece_map_at(p).second_derivative_at(p),
        )

    def c1_defect_points(self) -> list:
        """Breakpoints where the first derivative jumps, as (point, left, right)."""
        defects = []
        for b in self.breakpoints():
            left, right = self.one_sided_derivatives(b)
            if left != right:
                defects.append((b, left, right))
        return defects

    def c2_defect_points(self) -> list:
        """
        Breakpoints where the 2-jet jumps, as (point, (left', left''), (right', right'')).
        """
        defects = []
        for b in self.breakpoints():
            (left1, right1), (left2, right2) = self.one_sided_derivatives(b), self.one_sided_second_derivatives(b)
            left, right = (left1, left2), (right1, right2)
            if left != right:
                defects.append((b, left, right))
        return defects

    def __eq__(self, other):
        if not isinstance(other, PwProjMap):
            return NotImplemented
        return self.starts == other.starts and self.maps == other.maps

    def __hash__(self):
        return hash(("PwProjMap", self.starts, self.maps))

    def __repr__(self):
        return f"PwProjMap({', '.join(f'{p.arc}: {p.map}' for p in self.pieces())})"

    __str__ = __repr__


def _read_piece(piece) -> tuple:
    if isinstance(piece, Piece):
        return (as_point(piece.arc.start), as_point(piece.arc.end), piece.map)
    if isinstance(piece, dict):
        try:
            return (as_point(piece["from"]), as_point(piece["to"]), as_moebius(piece["m"]))
        except KeyError as e:
            raise ScalarParseError(f"Piece {piece!r} is missing {e}.") from e
    try:
        start, end, m = piece
    except (TypeError, ValueError) as e:
        raise ScalarParseError(f"Expected (start, end, map), got {piece!r}.") from e
    return (as_point(start), as_point(end), as_moebius(m))


def _normalize(starts: tuple, maps: tuple) -> tuple:
    """Drops breakpoints whose two sides carry projectively equal maps."""
    if len(starts) <= 1:
        return (INF,), maps[:1]

    keep = [i for i in range(len(starts)) if maps[i - 1] != maps[i]]
    if not keep:
        logger.log(f"All {len(starts)} pieces share one map", level=logger.DEBUG)
        return (INF,), maps[:1]
    return tuple(starts[i] for i in keep), tuple(maps[i] for i in keep)


def identity_map() -> PwProjMap:
    return PwProjMap((INF,), (identity(),))


def build(pieces) -> PwProjMap:
    return PwProjMap.build(pieces)


def evaluate(f: PwProjMap, p):
    return f.apply(p)


def compose(f: PwProjMap, g: PwProjMap) -> PwProjMap:
    """f ∘ g."""
    return f.compose(g)


def inverse(f: PwProjMap) -> PwProjMap:
    return f.inverse()


def equal(f: PwProjMap, g: PwProjMap) -> bool:
    return f == g


def breakpoints(f: PwProjMap) -> list:
    return f.breakpoints()


def one_sided_derivatives(f: PwProjMap, p) -> tuple:
    return f.one_sided_derivatives(p)


def c1_defect_points(f: PwProjMap) -> list:
    return f.c1_defect_points()


def c2_defect_points(f: PwProjMap) -> list:
    return f.c2_defect_points()
