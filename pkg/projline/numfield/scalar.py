"""
Helpers that treat every exact scalar alike.

A scalar is a `Fraction`, a `RealAlgebraic` of degree at least 2, or a `FieldElement`.
Plain ints are accepted wherever a scalar is read and become `Fraction`.
"""
from fractions import Fraction

import mpmath

from projline.exceptions.all import InternalLimitError, NumFieldError, ScalarParseError
from projline.numfield import realalg
from projline.numfield.field import FieldElement
from projline.numfield.interval import ihorner
from projline.numfield.realalg import RealAlgebraic, real_algebraic
from projline.settings import SETTINGS

SCALAR_TYPES = (Fraction, RealAlgebraic, FieldElement)


def is_scalar(value) -> bool:
    return isinstance(value, SCALAR_TYPES) or (isinstance(value, int) and not isinstance(value, bool))


def as_scalar(value):
    """
    Reads a scalar from Python or JSON data.

    Accepts ints, `Fraction`, "p/q" strings, {"poly", "lo", "hi"} mappings and
    existing scalars. Degree-1 `RealAlgebraic` values become `Fraction`.

    Raises:
        ScalarParseError: For anything else, floats included.
    """
    if isinstance(value, bool):
        raise ScalarParseError(f"Not a scalar: {value!r}.")

    if isinstance(value, int):
        return Fraction(value)

    if isinstance(value, RealAlgebraic):
        return value.rational if value.is_rational else value

    if isinstance(value, (Fraction, FieldElement)):
        return value

    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ScalarParseError(f"Not a rational: {value!r}.") from e

    if isinstance(value, dict) and {"poly", "lo", "hi"} <= set(value):
        try:
            lo, hi = Fraction(str(value["lo"])), Fraction(str(value["hi"]))
        except (ValueError, ZeroDivisionError) as e:
            raise ScalarParseError(f"Bad isolating interval in {value!r}.") from e
        return real_algebraic(value["poly"], lo, hi)

    raise ScalarParseError(f"Not a scalar: {value!r}.")


def is_rational(x) -> bool:
    return isinstance(x, (int, Fraction)) or (isinstance(x, RealAlgebraic) and x.is_rational)


def to_real_algebraic(x):
    """`Fraction` stays `Fraction`; field elements are embedded in the reals."""
    if isinstance(x, FieldElement):
        return x.to_real_algebraic()
    return as_scalar(x)


def algebraic_degree(x) -> int:
    real = to_real_algebraic(x)
    return 1 if isinstance(real, Fraction) else real.degree


def sign(x) -> int:
    if isinstance(x, (int, Fraction)):
        return (x > 0) - (x < 0)
    return x.sign()


def compare(x, y) -> int:
    """Exact three-way comparison of two scalars."""
    if isinstance(x, (int, Fraction)) and isinstance(y, (int, Fraction)):
        return (x > y) - (x < y)
    if isinstance(x, (int, Fraction)):
        return -y.compare(Fraction(x))
    return x.compare(y)


def sqrt(x):
    """Exact square root of a nonnegative scalar."""
    return realalg.sqrt(to_real_algebraic(x))


def enclosure(x, width) -> tuple[Fraction, Fraction]:
    """A rational interval of width at most `width` containing x."""
    width = Fraction(width)
    if isinstance(x, (int, Fraction)):
        return (Fraction(x), Fraction(x))

    if isinstance(x, RealAlgebraic):
        return x.narrow(width)

    root = x.context.root
    if isinstance(root, Fraction):
        value = x.to_real_algebraic()
        return (value, value)

    for _ in range(SETTINGS["MAX_BISECTIONS"]):
        lo, hi = ihorner(x.coeffs, root.bounds)
        if hi - lo <= width:
            return (lo, hi)
        root._bisect()
    raise InternalLimitError("Enclosing a field element exceeded the bisection cap.")


def to_mpf(x, digits: int = None):
    digits = digits or SETTINGS["DIGITS"]
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        with mpmath.workdps(digits + 10):
            return mpmath.mpf(x.numerator) / x.denominator
    return x.to_mpf(digits)


def to_float(x) -> float:
    return float(to_mpf(x, 17))


def format_scalar(x, digits: int = None) -> str:
    """Decimal rendering with `digits` significant digits."""
    digits = digits or SETTINGS["DIGITS"]
    return mpmath.nstr(to_mpf(x, digits), digits)


def exact_str(x) -> str:
    """Exact human-readable form: "p/q" for rationals, a field expression or a root description."""
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    if isinstance(x, FieldElement):
        return str(x)
    if isinstance(x, RealAlgebraic):
        lo, hi = x.canonical_bounds()
        return f"root of {x.poly} in ({lo}, {hi})"
    raise NumFieldError(f"Not a scalar: {x!r}.")
