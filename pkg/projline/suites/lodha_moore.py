"""
Checks of the Lodha-Moore tree model against its piecewise projective image.
"""
import random

from fractions import Fraction

from projline.catalog import preset_lodha_moore
from projline.moebius import INF, scaling, translation
from projline.settings import SETTINGS
from projline.treemodel import EvPerSeq, phi, random_seq, verify_conjugacy

# Tree words and the names of their images in the lodha_moore preset.
EMBEDDED_ELEMENTS = [
    ("x_10", "x_10"),
    ("y_101", "y_101"),
    ("y_100^-1.y_101", "y_100_inv_y_101"),
]


def samples(seed: int, n: int = 100) -> list:
    rng = random.Random(seed)
    return [random_seq(rng) for _ in range(n)]


def matrices_are_continuous() -> bool:
    G = preset_lodha_moore()
    third, half = Fraction(1, 3), Fraction(1, 2)
    x_10 = G["x_10"]
    return x_10.piece_map_left_of(third)(third) == half and x_10.piece_map_at(third)(third) == half


def constant_sequences_at_infinity() -> bool:
    return phi("(0)") is INF and phi("(1)") is INF


def two_to_one() -> bool:
    rng = random.Random(SETTINGS["DEFAULT_SEED"])
    for _ in range(50):
        s = "".join(rng.choice("01") for _ in range(rng.randint(0, 8)))
        if phi(EvPerSeq(s + "0", "1")) != phi(EvPerSeq(s + "1", "0")):
            return False
    return True


def x_is_translation() -> bool:
    return verify_conjugacy("x", translation(1), samples(SETTINGS["DEFAULT_SEED"]))


def y_quotient_is_scaling() -> bool:
    return verify_conjugacy("y_0^-1.y_1", scaling(2), samples(SETTINGS["DEFAULT_SEED"] + 1))


def embedded_element(word: str, name: str):
    def check() -> bool:
        return verify_conjugacy(word, preset_lodha_moore()[name], samples(SETTINGS["DEFAULT_SEED"] + 2))
    return check


def checks() -> list:
    bundle = [
        ("matrices-continuous", matrices_are_continuous),
        ("constant-sequences", constant_sequences_at_infinity),
        ("two-to-one", two_to_one),
        ("x-translation", x_is_translation),
        ("y-quotient-scaling", y_quotient_is_scaling),
    ]
    bundle += [(f"conjugacy-{name}", embedded_element(word, name)) for word, name in EMBEDDED_ELEMENTS]
    return bundle
