"""
projline: exact computation with piecewise projective homeomorphisms of the projective line.

projline works with circle homeomorphisms that are Möbius on finitely many arcs, using exact
arithmetic throughout: rationals, real algebraic numbers and elements of real number fields.
It builds the classical examples (Thurston's model of Thompson's T, Monod's groups, the
Lodha-Moore group, the broken Baumslag-Solitar groups G_λ), checks their relations, finds
breakpoints, fixed points, derivative jumps and linked pairs of fixed points, and runs the
continued-fraction tree model of the Lodha-Moore group.

### Key Features:
- **Exact scalars**: `fractions.Fraction` fast path, real algebraic numbers isolated by Sturm
  sequences, and number-field elements for irrational λ.
- **Piecewise projective maps**: validated construction, composition, inversion, C¹/C² defects,
  fixed sets, supports and germs at infinity.
- **Group catalogs**: named generator sets with a word engine and relation checker.
- **Command line**: every operation is a `projline` subcommand emitting JSON.

### Quick Start Example:

```python
from fractions import Fraction

from projline.catalog import preset_thompson_t
from projline.pwhomeo import c1_defect_points, one_sided_derivatives

T = preset_thompson_t()
c = T["c"]
print(one_sided_derivatives(c, Fraction(1, 2)))  # (Fraction(4, 1), Fraction(4, 1))
print(c1_defect_points(c))  # []
```
"""

from projline.version import version

__author__ = "Brian Musakwa"
__email__ = "digreatbrian@gmail.com"
__version__ = version
