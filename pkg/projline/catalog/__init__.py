"""
Named generator sets for the classical groups of piecewise projective maps, and a word
engine for evaluating words and checking relations.

Example:

```py
from projline.catalog import get_preset

T = get_preset("thompson_t")
T.check_relation("a^2")  # True
T.check_relation("b^3")  # True
```
"""
from projline.catalog.word import Word, as_word
from projline.catalog.genset import GenSet, check_relation, commutator, eval_word
from projline.catalog.monod import in_psl2_localization, monod_element, ring_membership
from projline.catalog.presets import (
    GAMMA_HZ,
    PRESETS,
    chain_elements,
    check_lambda,
    get_preset,
    preset_f_alpha,
    preset_g_lambda,
    preset_lodha_moore,
    preset_monod_hz,
    preset_thompson_t,
    thompson_f_relations,
    with_thompson_f,
)
