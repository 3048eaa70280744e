"""
Exact arithmetic: rationals, real algebraic numbers and number-field elements, with the
polynomial machinery behind them (Sturm sequences, resultants, companion matrices and
the Galois hyperbolicity test).

Example:

```py
from fractions import Fraction
from projline.numfield import RealAlgebraic, sturm_count, IntPolynomial

root5 = RealAlgebraic([-5, 0, 1], 2, 3)
golden = (root5 - 1) / 2
golden > Fraction(1, 2)  # True
sturm_count(IntPolynomial([-2, 0, 1]), 0, 2)  # 1
```
"""
from projline.numfield.polynomial import IntPolynomial, sturm_count, isolate_real_roots
from projline.numfield.realalg import RealAlgebraic, real_algebraic, real_roots
from projline.numfield.field import NumberFieldContext, FieldElement, field_element
from projline.numfield.galois import (
    abelianization_torsion,
    companion_matrix,
    is_galois_hyperbolic,
)
from projline.numfield.scalar import (
    as_scalar,
    compare,
    enclosure,
    format_scalar,
    is_rational,
    is_scalar,
    sign,
    sqrt,
    to_float,
    to_mpf,
    to_real_algebraic,
    algebraic_degree,
)
