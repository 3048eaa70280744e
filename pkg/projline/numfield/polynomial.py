"""
Integer polynomials and real root isolation.

Coefficients are stored constant term first, as in the JSON encoding. Heavy lifting
(gcd, Sturm sequences, factor lists, resultants) is delegated to sympy; evaluation at
rationals uses plain `Fraction` Horner loops, which is what the refinement loops call
thousands of times.
"""
from fractions import Fraction
from itertools import count
from typing import Iterable

import sympy
from sympy import Poly, Symbol

from projline.exceptions.all import (
    EndpointIsRootError,
    InternalLimitError,
    NumFieldError,
    ScalarParseError,
    ZeroPolynomialError,
)
from projline.settings import SETTINGS

T = Symbol("t")


def _to_fraction(value) -> Fraction:
    """Converts a sympy or Python rational to `Fraction`."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(int(value.p), int(value.q))


def horner(coeffs: Iterable[Fraction], x: Fraction) -> Fraction:
    """Evaluates a polynomial given constant term first."""
    acc = Fraction(0)
    for c in reversed(tuple(coeffs)):
        acc = acc * x + c
    return acc


def sign_of(value) -> int:
    return (value > 0) - (value < 0)


class IntPolynomial:
    """
    Polynomial with integer coefficients, constant term first.

    The zero polynomial has no coefficients and degree -1. Instances are immutable;
    the Sturm sequence is computed on first use and cached.
    """
    __slots__ = ("coeffs", "_sturm")

    def __init__(self, coeffs: Iterable):
        values = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ScalarParseError(f"Polynomial coefficient {c} is not an integer.")
                c = c.numerator
            if isinstance(c, bool) or not isinstance(c, int):
                try:
                    c = int(str(c).strip())
                except ValueError as e:
                    raise ScalarParseError(f"Polynomial coefficient {c!r} is not an integer.") from e
            values.append(c)

        while values and values[-1] == 0:
            values.pop()

        self.coeffs = tuple(values)
        self._sturm = None

    @classmethod
    def from_sympy(cls, poly: Poly) -> "IntPolynomial":
        """
        Builds an integer polynomial from a univariate sympy `Poly`, clearing denominators.
        """
        if poly.is_zero:
            return cls(())
        _, poly = poly.clear_denoms(convert=True)
        return cls(int(c) for c in reversed(poly.all_coeffs()))

    @classmethod
    def from_expr(cls, expr) -> "IntPolynomial":
        """Builds a polynomial from a sympy expression in `T`."""
        return cls.from_sympy(Poly(expr, T))

    def to_sympy(self, gen: Symbol = T) -> Poly:
        return Poly(list(reversed(self.coeffs)) or [0], gen, domain=sympy.ZZ)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x) -> Fraction:
        return horner(self.coeffs, Fraction(x))

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = sympy.igcd(g, c)
        return int(g)

    def primitive(self) -> "IntPolynomial":
        """Divides by the content and makes the leading coefficient positive."""
        if self.is_zero:
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPolynomial(c // g for c in self.coeffs)

    def reciprocal(self) -> "IntPolynomial":
        """Returns t^d p(1/t)."""
        return IntPolynomial(reversed(self.coeffs))

    def gcd(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_sympy(self.to_sympy().gcd(other.to_sympy())).primitive()

    def is_squarefree(self) -> bool:
        if self.is_zero:
            return False
        return self.gcd(self.derivative()).degree < 1

    def squarefree_part(self) -> "IntPolynomial":
        if self.degree < 1:
            return self.primitive()
        return IntPolynomial.from_sympy(self.to_sympy().sqf_part()).primitive()

    def factors(self) -> list["IntPolynomial"]:
        """Irreducible factors over Q, primitive, without multiplicities."""
        _, factors = self.to_sympy().factor_list()
        return [IntPolynomial.from_sympy(f).primitive() for f, _ in factors]

    def compose(self, inner: Poly) -> "IntPolynomial":
        """Substitutes a sympy polynomial in `T` for the variable."""
        return IntPolynomial.from_sympy(self.to_sympy().compose(inner))

    def sturm_sequence(self) -> tuple[tuple[Fraction, ...], ...]:
        if self._sturm is None:
            sequence = self.to_sympy().sturm()
            self._sturm = tuple(
                tuple(_to_fraction(c) for c in reversed(s.all_coeffs())) for s in sequence if not s.is_zero
            )
        return self._sturm

    def sign_variations(self, x: Fraction) -> int:
        signs = [sign_of(horner(s, x)) for s in self.sturm_sequence()]
        signs = [s for s in signs if s]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def sturm_count(self, lo, hi) -> int:
        """
        Number of distinct real roots in the open interval (lo, hi).

        Raises:
            ZeroPolynomialError: For the zero polynomial.
            EndpointIsRootError: If p(lo) = 0 or p(hi) = 0.
        """
        return sturm_count(self, lo, hi)

    def cauchy_bound(self) -> Fraction:
        """Every real root has absolute value strictly below this bound."""
        lead = abs(self.leading)
        return 1 + max((Fraction(abs(c), lead) for c in self.coeffs[:-1]), default=Fraction(0))

    def roots_below(self, x) -> int:
        """Number of distinct real roots strictly below x (x must not be a root)."""
        bound = self.cauchy_bound()
        x = Fraction(x)
        if x <= -bound:
            return 0
        return self.sturm_count(-bound, x)

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("IntPolynomial", self.coeffs))

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return str(self.to_sympy().as_expr())


def sturm_count(p: IntPolynomial, lo, hi) -> int:
    """
    Counts the distinct real roots of p in (lo, hi) with a Sturm sequence.

    Args:
        p (IntPolynomial): Nonzero polynomial.
        lo: Lower endpoint, not a root of p.
        hi: Upper endpoint, not a root of p, greater than lo.

    Returns:
        int: The exact number of distinct real roots in the open interval.

    Raises:
        ZeroPolynomialError: If p is the zero polynomial.
        EndpointIsRootError: If p vanishes at an endpoint.
        NumFieldError: If lo >= hi.
    """
    if p.is_zero:
        raise ZeroPolynomialError("Cannot count the roots of the zero polynomial.")

    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise NumFieldError(f"Empty interval ({lo}, {hi}).")

    if p(lo) == 0 or p(hi) == 0:
        raise EndpointIsRootError(f"{p} vanishes at an endpoint of ({lo}, {hi}).")

    if p.degree < 1:
        return 0
    return p.sign_variations(lo) - p.sign_variations(hi)


def split_point(p: IntPolynomial, lo: Fraction, hi: Fraction) -> Fraction:
    """A point strictly inside (lo, hi), near the midpoint, that is not a root of p."""
    mid = (lo + hi) / 2
    if p(mid) != 0:
        return mid

    width = hi - lo
    for k in count(2):
        for candidate in (mid + width / 2 ** k, mid - width / 2 ** k):
            if p(candidate) != 0:
                return candidate


def isolate_real_roots(p: IntPolynomial) -> list[tuple[Fraction, Fraction]]:
    """
    Isolates every real root of the squarefree part of p.

    Returns:
        list[tuple[Fraction, Fraction]]: Disjoint open intervals in increasing order,
            each containing exactly one real root, endpoints never roots.

    Raises:
        ZeroPolynomialError: If p is the zero polynomial.
        InternalLimitError: If bisection exceeds the configured cap.
    """
    if p.is_zero:
        raise ZeroPolynomialError("The zero polynomial has no isolated roots.")

    q = p.squarefree_part()
    if q.degree < 1:
        return []

    bound = q.cauchy_bound()
    total = q.sturm_count(-bound, bound)
    work = [(-bound, bound, total)]
    isolated = []
    budget = SETTINGS["MAX_BISECTIONS"]

    while work:
        lo, hi, n = work.pop()
        if n == 0:
            continue
        if n == 1:
            isolated.append((lo, hi))
            continue

        budget -= 1
        if budget < 0:
            raise InternalLimitError(f"Root isolation of {q} exceeded the bisection cap.")

        mid = split_point(q, lo, hi)
        left = q.sturm_count(lo, mid)
        work.append((mid, hi, n - left))
        work.append((lo, mid, left))

    return sorted(isolated)
