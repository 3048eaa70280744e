"""
Exact real algebraic numbers.

A `RealAlgebraic` is the unique root of an irreducible integer polynomial inside an
open rational interval. Arithmetic results that turn out to be rational are returned
as `fractions.Fraction`, so an irrational scalar always has degree at least 2 and a
rational one is always a `Fraction`.

Results are computed along two paths:

- Rational Möbius images (x + q, q·x, -x, 1/x, ...) transform the minimal polynomial
  directly and stay irreducible, no factoring needed.
- Sums and products of two irrationals eliminate through a resultant, then pick the
  irreducible factor vanishing on the refined enclosure.
"""
import math
from fractions import Fraction

import mpmath
import sympy
from sympy import Poly, QQ, Symbol

from projline.exceptions.all import (
    DivisionByZeroError,
    InternalLimitError,
    NotSquarefreeError,
    NumFieldError,
    ZeroPolynomialError,
)
from projline.numfield.interval import iadd, imul
from projline.numfield.polynomial import (
    T,
    IntPolynomial,
    isolate_real_roots,
    sign_of,
    split_point,
)
from projline.settings import SETTINGS

S = Symbol("s")


def _rat(q: Fraction) -> sympy.Rational:
    return sympy.Rational(q.numerator, q.denominator)


def _budget() -> range:
    return range(SETTINGS["MAX_BISECTIONS"])


def _limit(what: str) -> InternalLimitError:
    return InternalLimitError(
        f"{what} exceeded the bisection cap of {SETTINGS['MAX_BISECTIONS']} "
        "(raise PROJLINE_MAX_BISECTIONS to allow more)."
    )


def isolating_factor(p: IntPolynomial, lo: Fraction, hi: Fraction) -> IntPolynomial:
    """
    Returns the irreducible factor of a squarefree p with a root in (lo, hi).

    The caller guarantees that (lo, hi) isolates exactly one root of p.
    """
    if p.degree <= 1:
        return p.primitive()

    for factor in p.factors():
        if factor.degree >= 1 and factor.sturm_count(lo, hi) == 1:
            return factor
    raise NumFieldError(f"No factor of {p} has a root in ({lo}, {hi}).")


def real_algebraic(poly, lo, hi):
    """
    Builds the exact number isolated by (lo, hi), demoting rationals to `Fraction`.

    Args:
        poly (IntPolynomial | list[int]): Nonzero annihilating polynomial. It need not be
            squarefree or irreducible.
        lo: Lower end of the isolating interval.
        hi: Upper end of the isolating interval.

    Returns:
        Fraction | RealAlgebraic: The number.

    Raises:
        NumFieldError: If (lo, hi) does not isolate exactly one root.
        EndpointIsRootError: If an endpoint is a root.
    """
    poly = poly if isinstance(poly, IntPolynomial) else IntPolynomial(poly)
    if poly.is_zero:
        raise ZeroPolynomialError("A number cannot be defined by the zero polynomial.")

    lo, hi = Fraction(lo), Fraction(hi)
    sqf = poly.squarefree_part()

    if sqf.sturm_count(lo, hi) != 1:
        raise NumFieldError(f"({lo}, {hi}) does not isolate exactly one root of {poly}.")

    factor = isolating_factor(sqf, lo, hi)
    if factor.degree == 1:
        return Fraction(-factor.coeffs[0], factor.coeffs[1])
    return RealAlgebraic._trusted(factor, lo, hi)


def real_roots(poly) -> list:
    """All real roots of a nonzero polynomial, increasing, rationals as `Fraction`."""
    poly = poly if isinstance(poly, IntPolynomial) else IntPolynomial(poly)
    sqf = poly.squarefree_part()
    return [real_algebraic(sqf, lo, hi) for lo, hi in isolate_real_roots(sqf)]


def moebius_image(x: "RealAlgebraic", a, b, c, d):
    """
    Exact image (a·x + b) / (c·x + d) of an irrational x under a rational Möbius map.

    The image of an irreducible polynomial's root under an invertible rational Möbius
    map is the root of Σ p_k (d·t - b)^k (a - c·t)^(n-k), again irreducible.
    """
    a, b, c, d = (Fraction(v) for v in (a, b, c, d))
    if a * d - b * c == 0:
        raise NumFieldError("Degenerate Möbius map in exact arithmetic.")

    if c != 0:
        x._refine_away_from(-d / c)

    n = x.poly.degree
    num = Poly(_rat(d) * T - _rat(b), T, domain=QQ)
    den = Poly(_rat(a) - _rat(c) * T, T, domain=QQ)
    image = Poly(0, T, domain=QQ)
    for k, coeff in enumerate(x.poly.coeffs):
        if coeff:
            image += coeff * num ** k * den ** (n - k)

    poly = IntPolynomial.from_sympy(image).primitive()
    lo, hi = x._bounds
    ends = sorted(((a * lo + b) / (c * lo + d), (a * hi + b) / (c * hi + d)))
    return RealAlgebraic._trusted(poly, ends[0], ends[1])


def _sum_resultant(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Res_s(p(s), q(t - s)): vanishes at every sum of a root of p and a root of q."""
    ps = p.to_sympy(S).as_expr()
    qs = q.to_sympy(T).as_expr().subs(T, T - S)
    return IntPolynomial.from_expr(sympy.resultant(ps, sympy.expand(qs), S))


def _product_resultant(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Res_s(p(s), s^m q(t/s)): vanishes at every product of a root of p and a root of q."""
    m = q.degree
    ps = p.to_sympy(S).as_expr()
    qs = sum(c * T ** k * S ** (m - k) for k, c in enumerate(q.coeffs))
    return IntPolynomial.from_expr(sympy.resultant(ps, qs, S))


def _combine(x: "RealAlgebraic", y: "RealAlgebraic", resultant, interval_op):
    r = resultant(x.poly, y.poly).squarefree_part()

    for _ in _budget():
        lo, hi = interval_op(x._bounds, y._bounds)
        if lo < hi and r(lo) != 0 and r(hi) != 0 and r.sturm_count(lo, hi) == 1:
            return real_algebraic(r, lo, hi)
        x._bisect()
        y._bisect()
    raise _limit("Isolating a sum or product")


def _sqrt_bounds(lo: Fraction, hi: Fraction, k: int) -> tuple[Fraction, Fraction]:
    """Rational L <= sqrt(lo) and U > sqrt(hi) with denominator 2^k."""
    scale = 4 ** k
    low = math.isqrt(lo.numerator * scale // lo.denominator)
    high = math.isqrt(-(-hi.numerator * scale // hi.denominator)) + 1
    return Fraction(low, 2 ** k), Fraction(high, 2 ** k)


def sqrt(x):
    """
    Exact nonnegative square root of a nonnegative rational or real algebraic number.

    Raises:
        NumFieldError: If x is negative.
    """
    if isinstance(x, int):
        x = Fraction(x)
    if isinstance(x, RealAlgebraic) and x.is_rational:
        x = x.rational

    if isinstance(x, Fraction):
        if x < 0:
            raise NumFieldError(f"Square root of negative number {x}.")
        n, d = x.numerator, x.denominator
        rn, rd = math.isqrt(n), math.isqrt(d)
        if rn * rn == n and rd * rd == d:
            return Fraction(rn, rd)
        r = math.isqrt(n * d)
        return real_algebraic(IntPolynomial((-n, 0, d)), Fraction(r, d), Fraction(r + 1, d))

    if x.sign() < 0:
        raise NumFieldError(f"Square root of negative number {x}.")

    squared = IntPolynomial(c for coeff in x.poly.coeffs for c in (coeff, 0))
    for k in range(1, SETTINGS["MAX_BISECTIONS"] + 1):
        lo, hi = _sqrt_bounds(*x._bounds, k)
        if lo < hi and squared(lo) != 0 and squared(hi) != 0 and squared.sturm_count(lo, hi) == 1:
            return real_algebraic(squared, lo, hi)
        x._bisect()
    raise _limit("Isolating a square root")


class RealAlgebraic:
    """
    Real root of an integer polynomial, isolated by an open rational interval.

    Values built through `RealAlgebraic(...)` keep the irreducible factor of the given
    polynomial that vanishes on the interval; arithmetic never produces a degree-1
    instance (it returns `Fraction`), but constructing one explicitly is allowed and it
    then behaves as its rational value.

    Example:

    ```py
    root2 = RealAlgebraic([-2, 0, 1], 1, 2)
    root2 * root2  # Fraction(2, 1)
    ```
    """
    __slots__ = ("poly", "_bounds", "_index", "_canonical")

    def __init__(self, poly, lo, hi):
        """
        Validates and canonicalizes the annihilator.

        Raises:
            ZeroPolynomialError: For the zero polynomial.
            NotSquarefreeError: If poly has repeated factors.
            NumFieldError: If (lo, hi) does not isolate exactly one root.
            EndpointIsRootError: If lo or hi is a root.
        """
        poly = poly if isinstance(poly, IntPolynomial) else IntPolynomial(poly)
        lo, hi = Fraction(lo), Fraction(hi)

        if poly.is_zero:
            raise ZeroPolynomialError("A number cannot be defined by the zero polynomial.")

        if not poly.is_squarefree():
            raise NotSquarefreeError(f"Annihilator {poly} is not squarefree.")

        if lo >= hi or poly.sturm_count(lo, hi) != 1:
            raise NumFieldError(f"({lo}, {hi}) does not isolate exactly one root of {poly}.")

        self.poly = isolating_factor(poly, lo, hi)
        self._bounds = (lo, hi)
        self._index = None
        self._canonical = None

    @classmethod
    def _trusted(cls, poly: IntPolynomial, lo: Fraction, hi: Fraction) -> "RealAlgebraic":
        """Skips validation: poly is irreducible and primitive, (lo, hi) isolates one root."""
        obj = object.__new__(cls)
        obj.poly = poly
        obj._bounds = (lo, hi)
        obj._index = None
        obj._canonical = None
        return obj

    @classmethod
    def from_rational(cls, q) -> "RealAlgebraic":
        """Degree-1 representation of a rational."""
        q = Fraction(q)
        return cls._trusted(IntPolynomial((-q.numerator, q.denominator)), q - 1, q + 1)

    @classmethod
    def from_roots(cls, poly) -> list:
        """All real roots of poly in increasing order (rational roots as `Fraction`)."""
        return real_roots(poly)

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def is_rational(self) -> bool:
        return self.poly.degree == 1

    @property
    def rational(self):
        """The value as a `Fraction` when the degree is 1, else None."""
        if self.poly.degree == 1:
            return Fraction(-self.poly.coeffs[0], self.poly.coeffs[1])
        return None

    @property
    def bounds(self) -> tuple[Fraction, Fraction]:
        """Current isolating interval; narrows as the value is refined."""
        return self._bounds

    @property
    def index(self) -> int:
        """Position of this root among the real roots of its polynomial, from 0."""
        if self._index is None:
            self._index = self.poly.roots_below(self._bounds[0])
        return self._index

    def canonical_bounds(self) -> tuple[Fraction, Fraction]:
        """Isolating interval independent of refinement history."""
        if self._canonical is None:
            self._canonical = isolate_real_roots(self.poly)[self.index]
        return self._canonical

    def _bisect(self):
        lo, hi = self._bounds
        if self.is_rational:
            q = self.rational
            self._bounds = ((lo + q) / 2, (hi + q) / 2)
            return

        mid = split_point(self.poly, lo, hi)
        if sign_of(self.poly(lo)) != sign_of(self.poly(mid)):
            self._bounds = (lo, mid)
        else:
            self._bounds = (mid, hi)

    def _refine_away_from(self, q: Fraction):
        """Refines until q lies outside the closed isolating interval."""
        for _ in _budget():
            lo, hi = self._bounds
            if q < lo or q > hi:
                return
            self._bisect()
        raise _limit("Separating a number from a rational")

    def narrow(self, width) -> tuple[Fraction, Fraction]:
        """Refines until the interval is at most `width` wide and returns it."""
        width = Fraction(width)
        for _ in _budget():
            lo, hi = self._bounds
            if hi - lo <= width:
                return self._bounds
            self._bisect()
        raise _limit("Narrowing an enclosure")

    def _compare_rational(self, q: Fraction) -> int:
        if self.is_rational:
            return sign_of(self.rational - q)

        for _ in _budget():
            lo, hi = self._bounds
            if q <= lo:
                return 1
            if q >= hi:
                return -1
            self._bisect()
        raise _limit("Comparing with a rational")

    def compare(self, other) -> int:
        """
        Exact three-way comparison.

        Returns:
            int: -1, 0 or 1 as self is less than, equal to or greater than other.
        """
        if isinstance(other, int):
            other = Fraction(other)

        if hasattr(other, "to_real_algebraic"):
            other = other.to_real_algebraic()

        if isinstance(other, RealAlgebraic) and other.is_rational:
            other = other.rational

        if isinstance(other, Fraction):
            return self._compare_rational(other)

        if not isinstance(other, RealAlgebraic):
            raise TypeError(f"Cannot compare RealAlgebraic with {type(other).__name__}.")

        if self.is_rational:
            return -other._compare_rational(self.rational)

        if self.poly == other.poly:
            lo = max(self._bounds[0], other._bounds[0])
            hi = min(self._bounds[1], other._bounds[1])
            if lo < hi and self.poly.sturm_count(lo, hi) == 1:
                return 0

        for _ in _budget():
            (a_lo, a_hi), (b_lo, b_hi) = self._bounds, other._bounds
            if a_hi <= b_lo:
                return -1
            if b_hi <= a_lo:
                return 1
            if a_hi - a_lo >= b_hi - b_lo:
                self._bisect()
            else:
                other._bisect()
        raise _limit("Comparing two algebraic numbers")

    def sign(self) -> int:
        return self._compare_rational(Fraction(0))

    def __add__(self, other):
        if isinstance(other, int):
            other = Fraction(other)
        if isinstance(other, RealAlgebraic) and other.is_rational:
            other = other.rational

        if self.is_rational and isinstance(other, (Fraction, RealAlgebraic)):
            return self.rational + other

        if isinstance(other, Fraction):
            if other == 0:
                return self
            return moebius_image(self, 1, other, 0, 1)

        if isinstance(other, RealAlgebraic):
            return _combine(self, other, _sum_resultant, iadd)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        if self.is_rational:
            return -self.rational
        return moebius_image(self, -1, 0, 0, 1)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, RealAlgebraic)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            other = Fraction(other)
        if isinstance(other, RealAlgebraic) and other.is_rational:
            other = other.rational

        if self.is_rational and isinstance(other, (Fraction, RealAlgebraic)):
            return self.rational * other

        if isinstance(other, Fraction):
            if other == 0:
                return Fraction(0)
            if other == 1:
                return self
            return moebius_image(self, other, 0, 0, 1)

        if isinstance(other, RealAlgebraic):
            return _combine(self, other, _product_resultant, imul)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self):
        if self.is_rational:
            q = self.rational
            if q == 0:
                raise DivisionByZeroError("Division by zero.")
            return 1 / q
        return moebius_image(self, 0, 1, 1, 0)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = Fraction(other)
        if isinstance(other, RealAlgebraic):
            return self * other.inverse()
        if isinstance(other, Fraction):
            if other == 0:
                raise DivisionByZeroError("Division by zero.")
            return self * (1 / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Fraction(other) * self.inverse()
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = Fraction(1)
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            if not self.is_rational:
                return False
            return self.rational == other
        if isinstance(other, RealAlgebraic) or hasattr(other, "to_real_algebraic"):
            if isinstance(other, RealAlgebraic) and not self.is_rational and not other.is_rational:
                if self.poly != other.poly:
                    return False
            return self.compare(other) == 0
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __hash__(self):
        if self.is_rational:
            return hash(self.rational)
        return hash(("RealAlgebraic", self.poly.coeffs, self.index))

    def __bool__(self):
        return not (self.is_rational and self.rational == 0)

    def to_mpf(self, digits: int = None):
        """Decimal approximation correct to the requested significant digits."""
        digits = digits or SETTINGS["DIGITS"]
        if self.is_rational:
            q = self.rational
        else:
            for _ in _budget():
                lo, hi = self._bounds
                magnitude = max(abs(lo), abs(hi))
                if lo * hi > 0 and hi - lo <= magnitude * Fraction(1, 10 ** (digits + 2)):
                    break
                self._bisect()
            else:
                raise _limit("Decimal rendering")
            q = (lo + hi) / 2

        with mpmath.workdps(digits + 10):
            return mpmath.mpf(q.numerator) / q.denominator

    def __float__(self):
        return float(self.to_mpf(17))

    def to_json(self) -> dict:
        lo, hi = self.canonical_bounds()
        return {"poly": self.poly.to_json(), "lo": str(lo), "hi": str(hi)}

    def __repr__(self):
        lo, hi = self._bounds
        return f"RealAlgebraic({list(self.poly.coeffs)}, {str(lo)!r}, {str(hi)!r})"

    def __str__(self):
        return mpmath.nstr(self.to_mpf(), SETTINGS["DIGITS"])
