"""
Exact checks of the concrete constructions: Thurston's c, Monod's γ and its linked
pair, Galois hyperbolicity, the groups G_λ with their copy of F, and the presentation
of the affine groups.
"""
import random

from fractions import Fraction

import numpy

from projline.catalog import (
    GAMMA_HZ,
    Word,
    preset_g_lambda,
    preset_thompson_t,
    thompson_f_relations,
    with_thompson_f,
)
from projline.moebius import ConjClass, translation
from projline.numfield import IntPolynomial, NumberFieldContext, is_galois_hyperbolic
from projline.obstruct import audit_pair, check_affine_presentation, hz_linked_report, rho
from projline.pwhomeo import MINUS, PLUS, PwProjMap, has_compact_support
from projline.settings import SETTINGS

HALF = Fraction(1, 2)

LAMBDA_CONTEXTS = {
    "2": NumberFieldContext.rational(2),
    "3": NumberFieldContext.rational(3),
    "sqrt2": NumberFieldContext([-2, 0, 1], 1, 2),
    "golden": NumberFieldContext([-1, -1, 1], 1, 2),
}

# (label, context, torsion of the abelianized affine group)
PRESENTATION_CASES = [
    ("t-2", LAMBDA_CONTEXTS["2"], 1),
    ("t-3", LAMBDA_CONTEXTS["3"], 2),
    ("t2-2", LAMBDA_CONTEXTS["sqrt2"], 1),
    ("t2-t-1", LAMBDA_CONTEXTS["golden"], 1),
    ("t3-2", NumberFieldContext([-2, 0, 0, 1], 1, 2), 1),
]

ORACLE_POLYNOMIALS = [
    [-2, 1], [-3, 1], [1, 1], [-1, 1], [-2, 0, 1], [-3, 0, 1], [-5, 0, 1],
    [-1, -1, 1], [-2, 0, 0, 1], [1, 4, 4, 4, 1], [1, 0, 1], [1, 1, 1],
    [1, 0, 0, 0, 1], [1, -3, 1], [2, -3, 2], [-1, -1, 0, 1],
    [1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1], [1, -1, 1], [2, 0, 1], [1, -4, 1],
    [3, -1, 1], [-1, 0, 1, 1], [1, 0, -3, 0, 1], [5, -2, 1], [1, 2, 3, 2, 1],
    [-7, 0, 1], [1, -5, 1], [1, 3, 1], [2, 1, 1, 2], [1, 1, 1, 1, 1],
]


def random_word(rng: random.Random, names: list, length: int) -> Word:
    return Word([(rng.choice(names), rng.choice([-1, 1])) for _ in range(length)])


def thurston_c_is_c1() -> bool:
    c = preset_thompson_t()["c"]
    expected = {0: (1, 1), HALF: (4, 4), 1: (1, 1)}
    return not c.c1_defect_points() and all(c.one_sided_derivatives(p) == d for p, d in expected.items())


def gamma_fixed_points() -> bool:
    if GAMMA_HZ.classify() != ConjClass.HYPERBOLIC:
        return False
    low, high = GAMMA_HZ.fixed_points()
    return low < Fraction(-3, 2) and HALF < high and high < 1


def hz_pair_linked() -> bool:
    return bool(hz_linked_report().linked)


def disjoint_supports_unlinked() -> bool:
    T = preset_thompson_t()
    c = T["c"]
    k = T.extend("c_shifted", c.conjugate(translation(1))).commutator("c", "c_shifted")
    return audit_pair("k", k, "far", k.conjugate(translation(5))).is_empty()


def galois_hyperbolic_cases() -> bool:
    positives = [[-n, 1] for n in range(2, 11)] + [[-m, 0, 1] for m in (2, 3, 5)]
    negatives = [[1, 4, 4, 4, 1], [-1, 1]]
    return all(is_galois_hyperbolic(p) for p in positives) and not any(is_galois_hyperbolic(p) for p in negatives)


def galois_float_oracle() -> bool:
    for coeffs in ORACLE_POLYNOMIALS:
        p = IntPolynomial(coeffs)
        if not p.is_squarefree():
            continue
        roots = numpy.roots(list(reversed(coeffs)))
        expected = all(abs(abs(r) - 1) > 1e-6 for r in roots)
        if is_galois_hyperbolic(p) != expected:
            return False
    return True


def g_lambda_algebra(ctx: NumberFieldContext):
    def check() -> bool:
        G = preset_g_lambda(ctx)
        k = G.commutator("b", "a_plus.b.a_plus^-1")
        return (
            G.check_relation("a_minus.a_plus.a^-1")
            and G.eval_word("a.b.a^-1") == PwProjMap.from_moebius(translation(ctx.gen))
            and not k.is_identity()
            and has_compact_support(k)
            and rho(k, PLUS).is_identity()
            and rho(k, MINUS).is_identity()
        )
    return check


def thompson_f_in_g2() -> bool:
    G = with_thompson_f(preset_g_lambda(LAMBDA_CONTEXTS["2"]))
    return all(G.check_relation(relation) for relation in thompson_f_relations())


def affine_presentation(ctx: NumberFieldContext, torsion: int):
    def check() -> bool:
        report = check_affine_presentation(ctx)
        return report.all_hold() and report.torsion == torsion
    return check


def group_laws() -> bool:
    rng = random.Random(SETTINGS["DEFAULT_SEED"])
    T = preset_thompson_t()
    names = ["a", "b", "c", "translation"]
    for _ in range(30):
        f, g, h = (T.eval_word(random_word(rng, names, 3)) for _ in range(3))
        if f.compose(g).compose(h) != f.compose(g.compose(h)):
            return False
        if not f.compose(f.inverse()).is_identity():
            return False
    return True


def rho_homomorphism() -> bool:
    rng = random.Random(SETTINGS["DEFAULT_SEED"])
    G = preset_g_lambda(LAMBDA_CONTEXTS["2"])
    names = ["a", "a_plus", "b"]
    for _ in range(50):
        f, g = G.eval_word(random_word(rng, names, 3)), G.eval_word(random_word(rng, names, 3))
        for side in (PLUS, MINUS):
            if rho(f.compose(g), side) != rho(f, side).compose(rho(g, side)):
                return False
    return True


def checks() -> list:
    bundle = [
        ("thurston-c-is-c1", thurston_c_is_c1),
        ("gamma-fixed-points", gamma_fixed_points),
        ("hz-pair-linked", hz_pair_linked),
        ("disjoint-supports-unlinked", disjoint_supports_unlinked),
        ("galois-hyperbolic", galois_hyperbolic_cases),
        ("galois-float-oracle", galois_float_oracle),
    ]
    bundle += [(f"g-lambda-{name}", g_lambda_algebra(ctx)) for name, ctx in LAMBDA_CONTEXTS.items()]
    bundle.append(("thompson-f-in-g2", thompson_f_in_g2))
    bundle += [
        (f"presentation-{label}", affine_presentation(ctx, torsion))
        for label, ctx, torsion in PRESENTATION_CASES
    ]
    bundle += [("group-laws", group_laws), ("rho-homomorphism", rho_homomorphism)]
    return bundle
