"""
Number fields Q(λ) for a real algebraic λ, with elements in the power basis.

Elements are kept as vectors of `Fraction` over {1, λ, ..., λ^(d-1)}; multiplication
reduces through precomputed powers of λ. An element with no λ part is returned as a
plain `Fraction`, so a degree-1 context only ever yields rationals.
"""
from fractions import Fraction
from typing import Iterable

import mpmath
import sympy
from sympy import Poly, QQ
from sympy.polys.polyerrors import NotInvertible

from projline.exceptions.all import (
    ContextMismatchError,
    DivisionByZeroError,
    InternalLimitError,
    NotSquarefreeError,
    NumFieldError,
)
from projline.logging import logger
from projline.numfield.interval import contains_zero, ihorner
from projline.numfield.polynomial import T, IntPolynomial
from projline.numfield.realalg import RealAlgebraic, real_algebraic
from projline.settings import SETTINGS


class NumberFieldContext:
    """
    The field Q(λ), λ given by its minimal polynomial and an isolating interval.

    Irreducibility is the caller's obligation. It is checked best effort: when the
    root turns out to satisfy a polynomial of lower degree a warning is logged and
    arithmetic carries on modulo the given polynomial.
    """

    def __init__(self, minpoly, lo, hi):
        """
        Raises:
            NumFieldError: For a constant polynomial, a zero constant term, or an
                interval that does not isolate exactly one root.
            NotSquarefreeError: If minpoly has repeated factors.
        """
        minpoly = minpoly if isinstance(minpoly, IntPolynomial) else IntPolynomial(minpoly)
        lo, hi = Fraction(lo), Fraction(hi)

        if minpoly.degree < 1:
            raise NumFieldError(f"Minimal polynomial {minpoly} must have positive degree.")

        if minpoly.coeffs[0] == 0:
            raise NumFieldError("Minimal polynomial has zero constant term, λ = 0 is excluded.")

        if not minpoly.is_squarefree():
            raise NotSquarefreeError(f"Minimal polynomial {minpoly} is not squarefree.")

        if lo >= hi or minpoly.sturm_count(lo, hi) != 1:
            raise NumFieldError(f"({lo}, {hi}) does not isolate exactly one root of {minpoly}.")

        self.minpoly = minpoly.primitive()
        self.lo, self.hi = lo, hi
        self.degree = self.minpoly.degree
        self.root = real_algebraic(self.minpoly, lo, hi)
        root_degree = self.root.degree if isinstance(self.root, RealAlgebraic) else 1

        # Reducible input: λ satisfies a factor of lower degree.
        self.reducible = root_degree < self.degree
        if self.reducible:
            logger.log(
                f"Minimal polynomial {self.minpoly} is reducible; λ has degree {root_degree}.",
                level=logger.WARNING,
            )

        lead = Fraction(self.minpoly.leading)
        self._monic = [Fraction(c) / lead for c in self.minpoly.coeffs]

        # _powers[k] is λ^k reduced to the power basis.
        d = self.degree
        self._powers = [tuple(Fraction(int(i == k)) for i in range(d)) for k in range(d)]
        while len(self._powers) < 2 * d - 1:
            self._extend_powers()

    @classmethod
    def rational(cls, q) -> "NumberFieldContext":
        """Degree-1 context for a nonzero rational λ."""
        q = Fraction(q)
        return cls((-q.numerator, q.denominator), q - 1, q + 1)

    @property
    def gen(self):
        """λ itself."""
        return self.element((0, 1)) if self.degree > 1 else self.root

    def element(self, coeffs: Iterable):
        """The element Σ coeffs[k] λ^k, given in the power basis (shorter vectors are padded)."""
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > self.degree:
            return self._reduce(coeffs)
        return field_element(self, coeffs)

    def _reduce(self, coeffs: list[Fraction]):
        d = self.degree
        out = list(coeffs[:d]) + [Fraction(0)] * max(0, d - len(coeffs))
        for k in range(d, len(coeffs)):
            if coeffs[k]:
                while k >= len(self._powers):
                    self._extend_powers()
                out = [o + coeffs[k] * p for o, p in zip(out, self._powers[k])]
        return field_element(self, out)

    def _extend_powers(self):
        prev = self._powers[-1]
        monic = self._monic
        shifted = [Fraction(0)] + list(prev[:-1])
        top = prev[-1]
        self._powers.append(tuple(shifted[i] - top * monic[i] for i in range(self.degree)))

    def power_of_gen(self, k: int):
        """λ^k for any integer k."""
        return self.gen ** k

    def header(self) -> dict:
        return {"minpoly": self.minpoly.to_json(), "lo": str(self.lo), "hi": str(self.hi)}

    def __eq__(self, other):
        if not isinstance(other, NumberFieldContext):
            return NotImplemented
        if self is other:
            return True
        return self.minpoly == other.minpoly and self.root == other.root

    def __hash__(self):
        return hash(("NumberFieldContext", self.minpoly.coeffs, hash(self.root)))

    def __repr__(self):
        return f"NumberFieldContext({self.minpoly.to_json()}, {str(self.lo)!r}, {str(self.hi)!r})"


def field_element(ctx: NumberFieldContext, coeffs: Iterable[Fraction]):
    """Builds an element, returning a `Fraction` when there is no λ part."""
    coeffs = tuple(Fraction(c) for c in coeffs)
    coeffs = coeffs + (Fraction(0),) * (ctx.degree - len(coeffs))
    if not any(coeffs[1:]):
        return coeffs[0]
    return FieldElement(ctx, coeffs)


class FieldElement:
    """
    Element of Q(λ) with a nonzero λ part, in the basis {1, λ, ..., λ^(d-1)}.
    """
    __slots__ = ("context", "coeffs", "_real")

    def __init__(self, context: NumberFieldContext, coeffs: tuple[Fraction, ...]):
        if len(coeffs) != context.degree:
            raise NumFieldError(f"Expected {context.degree} coefficients, got {len(coeffs)}.")
        self.context = context
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        self._real = None

    def _check(self, other):
        if isinstance(other, int):
            return Fraction(other)
        if isinstance(other, FieldElement) and other.context != self.context:
            raise ContextMismatchError("Cannot combine elements of different number fields.")
        return other

    def __add__(self, other):
        other = self._check(other)
        if isinstance(other, Fraction):
            return field_element(self.context, (self.coeffs[0] + other,) + self.coeffs[1:])
        if isinstance(other, FieldElement):
            return field_element(self.context, (a + b for a, b in zip(self.coeffs, other.coeffs)))
        if isinstance(other, RealAlgebraic):
            return self.to_real_algebraic() + other
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.context, tuple(-c for c in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._check(other)
        if isinstance(other, (Fraction, FieldElement, RealAlgebraic)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        other = self._check(other)
        if isinstance(other, (Fraction, RealAlgebraic)):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        other = self._check(other)
        if isinstance(other, Fraction):
            return field_element(self.context, (c * other for c in self.coeffs))
        if isinstance(other, FieldElement):
            d = self.context.degree
            product = [Fraction(0)] * (2 * d - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        product[i + j] += a * b
            return self.context._reduce(product)
        if isinstance(other, RealAlgebraic):
            return self.to_real_algebraic() * other
        return NotImplemented

    __rmul__ = __mul__

    def to_sympy(self) -> Poly:
        return Poly(
            [sympy.Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)],
            T,
            domain=QQ,
        )

    def inverse(self):
        """
        Inverse through the extended gcd with the minimal polynomial.

        Raises:
            DivisionByZeroError: If the element is zero (possible only for reducible
                minimal polynomials).
        """
        modulus = self.context.minpoly
        if self.context.reducible:
            root = self.context.root
            if isinstance(root, Fraction):
                value = self.to_real_algebraic()
                if value == 0:
                    raise DivisionByZeroError("Element is zero.")
                return 1 / value
            modulus = root.poly

        try:
            inv = sympy.invert(self.to_sympy(), modulus.to_sympy().set_domain(QQ))
        except NotInvertible as e:
            raise DivisionByZeroError("Element is not invertible in this field.") from e
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(Poly(inv, T, domain=QQ).all_coeffs())]
        return self.context.element(coeffs)

    def __truediv__(self, other):
        other = self._check(other)
        if isinstance(other, Fraction):
            if other == 0:
                raise DivisionByZeroError("Division by zero.")
            return self * (1 / other)
        if isinstance(other, FieldElement):
            return self * other.inverse()
        if isinstance(other, RealAlgebraic):
            return self.to_real_algebraic() / other
        return NotImplemented

    def __rtruediv__(self, other):
        other = self._check(other)
        if isinstance(other, (Fraction, RealAlgebraic)):
            return other * self.inverse()
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

    def is_zero(self) -> bool:
        if not any(self.coeffs):
            return True
        if not self.context.reducible:
            return False
        root = self.context.root
        if isinstance(root, Fraction):
            return sum(c * root ** k for k, c in enumerate(self.coeffs)) == 0
        return self.to_sympy().rem(root.poly.to_sympy().set_domain(QQ)).is_zero

    def sign(self) -> int:
        """Sign from interval evaluation over the refined enclosure of λ."""
        root = self.context.root
        if isinstance(root, Fraction):
            value = sum(c * root ** k for k, c in enumerate(self.coeffs))
            return (value > 0) - (value < 0)

        if self.is_zero():
            return 0

        for _ in range(SETTINGS["MAX_BISECTIONS"]):
            enclosure = ihorner(self.coeffs, root.bounds)
            if not contains_zero(enclosure):
                return 1 if enclosure[0] > 0 else -1
            root._bisect()
        raise InternalLimitError("Sign determination exceeded the bisection cap.")

    def compare(self, other) -> int:
        other = self._check(other)
        if isinstance(other, (Fraction, FieldElement)):
            diff = self - other
            if isinstance(diff, Fraction):
                return (diff > 0) - (diff < 0)
            return diff.sign()
        if isinstance(other, RealAlgebraic):
            return -other.compare(self)
        raise TypeError(f"Cannot compare FieldElement with {type(other).__name__}.")

    def mult_matrix(self) -> tuple[tuple[Fraction, ...], ...]:
        """
        Matrix of multiplication by this element in the power basis (column j holds
        the coordinates of self·λ^j).
        """
        d = self.context.degree
        columns = []
        for j in range(d):
            product = [Fraction(0)] * (2 * d - 1)
            for i, a in enumerate(self.coeffs):
                product[i + j] += a
            value = self.context._reduce(product)
            columns.append(value.coeffs if isinstance(value, FieldElement) else (value,) + (Fraction(0),) * (d - 1))
        return tuple(tuple(columns[j][i] for j in range(d)) for i in range(d))

    def norm(self) -> Fraction:
        """Field norm, the determinant of the multiplication matrix."""
        matrix = sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) for c in row] for row in self.mult_matrix()])
        det = matrix.det()
        return Fraction(int(det.p), int(det.q))

    def to_real_algebraic(self):
        """
        The same number as a `RealAlgebraic` (or `Fraction`), annihilated by the
        characteristic polynomial of the multiplication matrix.
        """
        if self._real is not None:
            return self._real

        root = self.context.root
        if isinstance(root, Fraction):
            self._real = sum(c * root ** k for k, c in enumerate(self.coeffs))
            return self._real

        if self.is_zero():
            self._real = Fraction(0)
            return self._real

        matrix = sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) for c in row] for row in self.mult_matrix()])
        charpoly = IntPolynomial.from_sympy(matrix.charpoly(T)).squarefree_part()

        for _ in range(SETTINGS["MAX_BISECTIONS"]):
            lo, hi = ihorner(self.coeffs, root.bounds)
            if lo < hi and charpoly(lo) != 0 and charpoly(hi) != 0 and charpoly.sturm_count(lo, hi) == 1:
                self._real = real_algebraic(charpoly, lo, hi)
                return self._real
            root._bisect()
        raise InternalLimitError("Embedding a field element exceeded the bisection cap.")

    def to_mpf(self, digits: int = None):
        real = self.to_real_algebraic()
        if isinstance(real, Fraction):
            with mpmath.workdps((digits or SETTINGS["DIGITS"]) + 10):
                return mpmath.mpf(real.numerator) / real.denominator
        return real.to_mpf(digits)

    def __float__(self):
        return float(self.to_mpf(17))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FieldElement, RealAlgebraic)):
            if isinstance(other, FieldElement) and other.context != self.context:
                return self.to_real_algebraic() == other.to_real_algebraic()
            if isinstance(other, FieldElement) and not self.context.reducible:
                return self.coeffs == other.coeffs
            if isinstance(other, (int, Fraction)) and not self.context.reducible:
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
        return hash(self.to_real_algebraic())

    def __bool__(self):
        return not self.is_zero()

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    def __repr__(self):
        return f"FieldElement({[str(c) for c in self.coeffs]})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if k == 0 else f"{c}*λ" + (f"^{k}" if k > 1 else ""))
        return " + ".join(terms)
