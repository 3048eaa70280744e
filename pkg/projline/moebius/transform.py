"""
Möbius transformations t ↦ (a·t + b) / (c·t + d) with positive determinant.

Maps are considered up to a nonzero scalar (PSL(2, R)): [[a, b], [c, d]] and
[[-a, -b], [-c, -d]] are the same map. Every formula below (derivatives,
classification) is written scale-invariantly, so no square roots are needed to
normalize the determinant.
"""
import enum
import math

from fractions import Fraction
from functools import reduce

from projline.exceptions.all import (
    DegenerateMatrixError,
    IdentityInputError,
    NonDistinctPointsError,
    OrientationViolation,
    ScalarParseError,
    UndefinedDerivativeError,
)
from projline.moebius.point import INF, as_point, circle_key
from projline.numfield import scalar


class ConjClass(enum.Enum):
    """Conjugacy type of a Möbius map, read off from Tr² against 4·det."""
    IDENTITY = "identity"
    HYPERBOLIC = "hyperbolic"
    PARABOLIC = "parabolic"
    ELLIPTIC = "elliptic"


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _rational_canonical(entries: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    """Primitive integer form, then det-1 scaling when det is a square, first nonzero positive."""
    denominator = reduce(_lcm, (e.denominator for e in entries), 1)
    ints = [e.numerator * (denominator // e.denominator) for e in entries]
    content = reduce(math.gcd, ints, 0)
    ints = [i // content for i in ints]

    det = ints[0] * ints[3] - ints[1] * ints[2]
    root = math.isqrt(det)
    scale = Fraction(root) if root * root == det else Fraction(1)

    first = next(i for i in ints if i != 0)
    if first < 0:
        scale = -scale
    return tuple(Fraction(i) / scale for i in ints)


def canonical_entries(a, b, c, d) -> tuple:
    """
    Canonical representative of the class of [[a, b], [c, d]] under nonzero scaling.

    Rational matrices take the rational form; otherwise the first nonzero entry is
    scaled to 1, which may reveal a rational matrix in disguise.
    """
    entries = (a, b, c, d)
    if all(scalar.is_rational(e) for e in entries):
        return _rational_canonical(tuple(Fraction(scalar.as_scalar(e)) for e in entries))

    first = next(e for e in entries if e != 0)
    scaled = tuple(scalar.as_scalar(e / first) if e != 0 else Fraction(0) for e in entries)
    if all(isinstance(e, Fraction) for e in scaled):
        return _rational_canonical(scaled)
    return scaled


class MoebiusMap:
    """
    Orientation preserving Möbius transformation of the projective line.

    Entries are exact scalars. Equality and hashing go through the canonical
    representative, so maps differing by a nonzero scalar compare equal.

    Example:

    ```py
    gamma = MoebiusMap(2, -1, -1, 1)
    gamma(0)           # Fraction(-1, 1)
    gamma.classify()   # ConjClass.HYPERBOLIC
    ```
    """
    __slots__ = ("a", "b", "c", "d", "_canonical")

    def __init__(self, a, b, c, d):
        """
        Raises:
            DegenerateMatrixError: If the determinant is zero.
            OrientationViolation: If the determinant is negative.
            ScalarParseError: If an entry is not an exact scalar.
        """
        self.a, self.b, self.c, self.d = (scalar.as_scalar(v) for v in (a, b, c, d))
        det_sign = scalar.sign(self.det())
        if det_sign == 0:
            raise DegenerateMatrixError(f"Matrix {self.entries_str()} has zero determinant.")
        if det_sign < 0:
            raise OrientationViolation(f"Matrix {self.entries_str()} reverses orientation.")
        self._canonical = None

    @classmethod
    def from_rows(cls, rows) -> "MoebiusMap":
        """Builds from [[a, b], [c, d]]."""
        try:
            (a, b), (c, d) = rows
        except (TypeError, ValueError) as e:
            raise ScalarParseError(f"Expected a 2x2 matrix, got {rows!r}.") from e
        return cls(a, b, c, d)

    @property
    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    @property
    def rows(self) -> tuple:
        return ((self.a, self.b), (self.c, self.d))

    @property
    def canonical(self) -> tuple:
        if self._canonical is None:
            self._canonical = canonical_entries(*self.entries)
        return self._canonical

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def trace_invariant(self):
        """Tr² / det, invariant under scaling and conjugation."""
        return self.trace() * self.trace() / self.det()

    def is_identity(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    def apply(self, p):
        """
        Projective action. A finite t with c·t + d = 0 goes to ∞; ∞ goes to a/c, or to ∞
        when c = 0.
        """
        p = as_point(p)
        if p is INF:
            return INF if self.c == 0 else scalar.as_scalar(self.a / self.c)

        den = self.c * p + self.d
        if den == 0:
            return INF
        return scalar.as_scalar((self.a * p + self.b) / den)

    __call__ = apply

    def compose(self, other: "MoebiusMap") -> "MoebiusMap":
        """self ∘ other (other is applied first)."""
        return MoebiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    __matmul__ = compose

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def power(self, n: int) -> "MoebiusMap":
        base = self if n >= 0 else self.inverse()
        result = identity()
        for _ in range(abs(n)):
            result = result.compose(base)
        return result

    def conjugate(self, g: "MoebiusMap") -> "MoebiusMap":
        """g ∘ self ∘ g⁻¹."""
        return g.compose(self).compose(g.inverse())

    def classify(self) -> ConjClass:
        if self.is_identity():
            return ConjClass.IDENTITY
        tr = self.trace()
        cmp = scalar.compare(tr * tr, 4 * self.det())
        if cmp > 0:
            return ConjClass.HYPERBOLIC
        if cmp == 0:
            return ConjClass.PARABOLIC
        return ConjClass.ELLIPTIC

    def fixed_points(self) -> list:
        """
        Fixed points, finite ones increasing, then ∞.

        Raises:
            IdentityInputError: For the identity, which fixes everything.
        """
        if self.is_identity():
            raise IdentityInputError("The identity fixes every point.")

        a, b, c, d = self.entries
        if c == 0:
            if a == d:
                return [INF]
            return [scalar.as_scalar(b / (d - a)), INF]

        # c·t² + (d - a)·t - b = 0
        disc = (d - a) * (d - a) + 4 * b * c
        disc_sign = scalar.sign(disc)
        if disc_sign < 0:
            return []

        if disc_sign == 0:
            return [scalar.as_scalar((a - d) / (2 * c))]

        root = scalar.sqrt(disc)
        roots = [scalar.as_scalar(((a - d) - root) / (2 * c)), scalar.as_scalar(((a - d) + root) / (2 * c))]
        roots.sort(key=circle_key)
        return roots

    def _chart_conjugate(self, p):
        """
        Returns (N, q) with N = σ_M(p) ∘ M ∘ σ_p⁻¹ and q = σ_p(p), where σ is t ↦ -1/t
        at ∞ and the identity elsewhere; N(q) is finite.
        """
        p = as_point(p)
        image = self.apply(p)
        matrix = self
        q = p
        if p is INF:
            matrix = matrix.compose(CHART_INVERSE)
            q = Fraction(0)
        if image is INF:
            matrix = CHART.compose(matrix)
        return matrix, q

    def derivative_at(self, p):
        """
        Derivative at p, in the chart s = -1/t at ∞ or where the image is ∞.

        Always positive.
        """
        matrix, q = self._chart_conjugate(p)
        den = matrix.c * q + matrix.d
        if den == 0:
            raise UndefinedDerivativeError(f"Derivative of {self} at {p} has no chart.")
        return scalar.as_scalar(matrix.det() / (den * den))

    def second_derivative_at(self, p):
        """Second derivative at p in the same charts as `derivative_at`."""
        matrix, q = self._chart_conjugate(p)
        den = matrix.c * q + matrix.d
        if den == 0:
            raise UndefinedDerivativeError(f"Second derivative of {self} at {p} has no chart.")
        return scalar.as_scalar(-2 * matrix.c * matrix.det() / (den * den * den))

    def is_in_psl2z(self) -> bool:
        """True iff some rescaling has integer entries and determinant 1."""
        entries = self.canonical
        if not all(isinstance(e, Fraction) for e in entries):
            return False
        if not all(e.denominator == 1 for e in entries):
            return False
        return entries[0] * entries[3] - entries[1] * entries[2] == 1

    def is_rational(self) -> bool:
        return all(isinstance(e, Fraction) for e in self.canonical)

    def __eq__(self, other):
        if not isinstance(other, MoebiusMap):
            return NotImplemented
        # Projective equality: all 2x2 minors of the stacked entries vanish.
        x, y = self.entries, other.entries
        return all(x[i] * y[j] == x[j] * y[i] for i in range(4) for j in range(i + 1, 4))

    def __hash__(self):
        return hash(("MoebiusMap", self.canonical))

    def entries_str(self) -> str:
        return "[[{}, {}], [{}, {}]]".format(*(scalar.exact_str(e) for e in self.entries))

    def __repr__(self):
        return f"MoebiusMap({', '.join(repr(e) for e in self.entries)})"

    def __str__(self):
        return self.entries_str()


CHART = MoebiusMap(0, -1, 1, 0)
CHART_INVERSE = MoebiusMap(0, 1, -1, 0)


def identity() -> MoebiusMap:
    return MoebiusMap(1, 0, 0, 1)


def translation(t) -> MoebiusMap:
    """t ↦ t + shift."""
    return MoebiusMap(1, t, 0, 1)


def scaling(s) -> MoebiusMap:
    """
    t ↦ s·t for s > 0.

    Raises:
        OrientationViolation: If s < 0.
        DegenerateMatrixError: If s = 0.
    """
    return MoebiusMap(s, 0, 0, 1)


def _to_zero_one_infinity(z1, z2, z3) -> tuple:
    """Entries of a (possibly orientation reversing) map sending z1, z2, z3 to 0, 1, ∞."""
    if z1 is INF:
        return (Fraction(0), z3 - z2, Fraction(-1), z3)
    if z2 is INF:
        return (Fraction(1), -z1, Fraction(1), -z3)
    if z3 is INF:
        return (Fraction(-1), z1, Fraction(0), z1 - z2)
    return (z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1))


def _mul(x: tuple, y: tuple) -> tuple:
    return (
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    )


def from_three_points(p1, p2, p3, q1, q2, q3) -> MoebiusMap:
    """
    The unique Möbius map sending p_i to q_i.

    Raises:
        NonDistinctPointsError: If the p_i or the q_i are not pairwise distinct.
        OrientationViolation: If the two triples have opposite cyclic orders.
    """
    ps = [as_point(p) for p in (p1, p2, p3)]
    qs = [as_point(q) for q in (q1, q2, q3)]
    for triple in (ps, qs):
        if triple[0] == triple[1] or triple[1] == triple[2] or triple[0] == triple[2]:
            raise NonDistinctPointsError(f"Points {triple} are not pairwise distinct.")

    source = _to_zero_one_infinity(*ps)
    target = _to_zero_one_infinity(*qs)
    a, b, c, d = target
    inverse_target = (d, -b, -c, a)
    entries = _mul(inverse_target, source)
    return MoebiusMap(*entries)


def as_moebius(value) -> MoebiusMap:
    """Reads a map from a `MoebiusMap`, [[a, b], [c, d]] or {"m": [[a, b], [c, d]]}."""
    if isinstance(value, MoebiusMap):
        return value
    if isinstance(value, dict) and "m" in value:
        value = value["m"]
    return MoebiusMap.from_rows(value)
