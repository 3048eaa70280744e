"""
The binary tree model of the Lodha-Moore group: eventually periodic binary sequences,
the maps x, y and their localizations x_s, y_s, and the continued fraction map Φ that
conjugates them to piecewise projective maps.

Example:

```py
from projline.treemodel import apply_word, phi

xi = apply_word("y_101.x_10", "10(01)")
phi(xi)
```
"""
from projline.treemodel.sequence import EvPerSeq, as_sequence, lex_compare, random_seq
from projline.treemodel.rules import (
    RULES,
    TreeGen,
    TreeKind,
    apply_gen,
    apply_word,
    apply_x,
    apply_x_inv,
    apply_y,
    apply_y_inv,
    as_tree_word,
    parse_tree_word,
    rewrite,
)
from projline.treemodel.phi import (
    READ_ONE,
    READ_ZERO,
    encode_rational,
    phi,
    tail_value,
    verify_conjugacy,
    word_matrix,
)
