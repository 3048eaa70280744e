"""
Preset generator sets for the classical groups of piecewise projective maps.

Presets:
- thompson_t: Thurston's model of Thompson's T (a, b, c) with F's generators.
- g_lambda: the broken Baumslag-Solitar group G_λ = ⟨a, a_plus, b⟩ for λ > 1.
- lodha_moore: the Lodha-Moore group (translation, c, d) and three of its elements.
- monod_hz: the linked pair f, g of Monod's group H(Z).
- f_alpha: F together with an irrational (or rational) translation t_alpha.
"""
from fractions import Fraction

from projline.exceptions.all import CatalogError, LambdaNotGreaterThanOneError, UnknownPresetError
from projline.moebius import INF, MoebiusMap, identity, scaling, translation
from projline.numfield import NumberFieldContext
from projline.pwhomeo import PwProjMap
from projline.catalog.genset import GenSet
from projline.catalog.monod import monod_element
from projline.catalog.word import Word

HALF = Fraction(1, 2)

GAMMA_HZ = MoebiusMap(2, -1, -1, 1)


def _thurston_c() -> PwProjMap:
    return PwProjMap.build([
        (INF, 0, identity()),
        (0, HALF, MoebiusMap(1, 0, -1, 1)),
        (HALF, 1, MoebiusMap(3, -1, 1, 0)),
        (1, INF, translation(1)),
    ])


def _lodha_moore_d() -> PwProjMap:
    return PwProjMap.build([(0, 1, MoebiusMap(2, 0, 1, 1)), (1, 0, identity())])


def preset_thompson_t() -> GenSet:
    """
    a: t ↦ -1/t, b: t ↦ 1/(1 - t), c: the four-piece C¹ element, and translation t ↦ t + 1.
    """
    return GenSet("thompson_t", {
        "a": PwProjMap.from_moebius(MoebiusMap(0, -1, 1, 0)),
        "b": PwProjMap.from_moebius(MoebiusMap(0, 1, -1, 1)),
        "c": _thurston_c(),
        "translation": PwProjMap.from_moebius(translation(1)),
    })


def check_lambda(ctx: NumberFieldContext):
    """
    Raises:
        LambdaNotGreaterThanOneError: If λ ≤ 1.
    """
    if not ctx.gen > 1:
        raise LambdaNotGreaterThanOneError(f"λ must exceed 1, got the root of {ctx.minpoly} in ({ctx.lo}, {ctx.hi}).")


def preset_g_lambda(ctx: NumberFieldContext) -> GenSet:
    """
    a: scaling by λ, a_plus: identity left of 0 and scaling right of 0,
    a_minus = a ∘ a_plus⁻¹, b: translation by 1.

    Raises:
        LambdaNotGreaterThanOneError: If λ ≤ 1.
    """
    check_lambda(ctx)
    lam = ctx.gen
    a = PwProjMap.from_moebius(scaling(lam))
    a_plus = PwProjMap.build([(INF, 0, identity()), (0, INF, scaling(lam))])
    return GenSet("g_lambda", {
        "a": a,
        "a_plus": a_plus,
        "a_minus": a.compose(a_plus.inverse()),
        "b": PwProjMap.from_moebius(translation(1)),
    }, ctx)


def preset_lodha_moore() -> GenSet:
    """
    translation, c and d generate the Lodha-Moore group; x_10, y_101 and
    y_100_inv_y_101 are the images under Φ of the tree elements with those names.
    """
    third = Fraction(1, 3)
    x_10 = PwProjMap.build([
        (0, third, MoebiusMap(1, 0, -1, 1)),
        (third, HALF, MoebiusMap(4, -1, 5, -1)),
        (HALF, 1, MoebiusMap(0, 1, -1, 2)),
        (1, 0, identity()),
    ])
    y_101 = PwProjMap.build([
        (HALF, 1, MoebiusMap(3, -1, 2, 0)),
        (1, HALF, identity()),
    ])
    y_100_inv_y_101 = PwProjMap.build([
        (0, HALF, MoebiusMap(1, 0, -2, 2)),
        (HALF, 1, MoebiusMap(3, -1, 2, 0)),
        (1, 0, identity()),
    ])
    return GenSet("lodha_moore", {
        "translation": PwProjMap.from_moebius(translation(1)),
        "c": _thurston_c(),
        "d": _lodha_moore_d(),
        "x_10": x_10,
        "y_101": y_101,
        "y_100_inv_y_101": y_100_inv_y_101,
    })


def preset_monod_hz() -> GenSet:
    """
    gamma = [[2, -1], [-1, 1]], f: gamma between its fixed points a < b and identity
    elsewhere, g = T ∘ f ∘ T⁻¹ with T the translation by 1.
    """
    low, high = GAMMA_HZ.fixed_points()
    f = monod_element(
        [(low, high, GAMMA_HZ), (high, low, identity())],
        {low: GAMMA_HZ, high: GAMMA_HZ},
    )
    return GenSet("monod_hz", {
        "gamma": PwProjMap.from_moebius(GAMMA_HZ),
        "f": f,
        "g": f.conjugate(translation(1)),
        "translation": PwProjMap.from_moebius(translation(1)),
    })


def preset_f_alpha(ctx: NumberFieldContext) -> GenSet:
    """
    translation, c and t_alpha: t ↦ t + α, for α ∈ (0, 1) the root of the context.

    Raises:
        CatalogError: If α is not in (0, 1).
    """
    alpha = ctx.gen
    if not (alpha > 0 and alpha < 1):
        raise CatalogError(f"α must lie in (0, 1), got the root of {ctx.minpoly} in ({ctx.lo}, {ctx.hi}).")
    return GenSet("f_alpha", {
        "translation": PwProjMap.from_moebius(translation(1)),
        "c": _thurston_c(),
        "t_alpha": PwProjMap.from_moebius(translation(alpha)),
    }, ctx)


PRESETS = {
    "thompson_t": (preset_thompson_t, False),
    "g_lambda": (preset_g_lambda, True),
    "lodha_moore": (preset_lodha_moore, False),
    "monod_hz": (preset_monod_hz, False),
    "f_alpha": (preset_f_alpha, True),
}


def get_preset(name: str, ctx: NumberFieldContext = None) -> GenSet:
    """
    Looks a preset up by name. g_lambda defaults to λ = 2 and f_alpha to α = 1/2.

    Raises:
        UnknownPresetError: For an unknown name.
    """
    try:
        factory, needs_context = PRESETS[name.replace("-", "_")]
    except KeyError:
        raise UnknownPresetError(f"Unknown preset {name!r}, choose from {', '.join(PRESETS)}.") from None

    if not needs_context:
        return factory()
    if ctx is None:
        ctx = NumberFieldContext.rational(2 if name.startswith("g") else HALF)
    return factory(ctx)


def thompson_f_relations() -> list:
    """
    The two defining relations of Thompson's F in generators x0, x1, with words
    composing as functions (x1^-1.x0 applies x0 first).
    """
    x0, x1 = Word.generator("x0"), Word.generator("x1")
    first = x1.inverse() + x0
    return [
        Word.commutator(first, x0 + x1 + x0.inverse()),
        Word.commutator(first, x0.power(2) + x1 + x0.power(-2)),
    ]


def with_thompson_f(gens: GenSet) -> GenSet:
    """G_λ with x0 = b and x1 = [a_plus, b] added, the generators of a copy of F."""
    return gens.define("x0", "b").define("x1", Word.commutator(Word.generator("a_plus"), Word.generator("b")))


def chain_elements(gens: GenSet) -> tuple:
    """f1 = b⁻¹ a_plus b and f2 = b a_minus b⁻¹ in G_λ, supported on (-1, ∞) and (-∞, 1)."""
    return gens.eval_word("b^-1.a_plus.b"), gens.eval_word("b.a_minus.b^-1")
