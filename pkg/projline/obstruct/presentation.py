"""
The presentation of the affine group A_λ = Z[λ, λ⁻¹] ⋊ ⟨λ⟩ for an algebraic λ > 1 of
degree d with primitive minimal polynomial α_d t^d + ... + α_0:

    b_i b_j = b_j b_i
    â b_j â⁻¹ = b_{j+1}                                  (0 ≤ j < d - 1)
    â b_{d-1}^{α_d} â⁻¹ = b_0^{-α_0} ⋯ b_{d-1}^{-α_{d-1}}

with b_j the translation by λ^j and â the scaling by λ.
"""
from typing import NamedTuple

from projline.catalog import GenSet, Word, check_lambda
from projline.logging import logger
from projline.moebius import scaling, translation
from projline.numfield import NumberFieldContext, abelianization_torsion
from projline.pwhomeo import PwProjMap

A_HAT = "a_hat"


class PresentationReport(NamedTuple):
    relations_checked: list
    torsion: int
    minpoly: list

    def all_hold(self) -> bool:
        return all(holds for _, holds in self.relations_checked)

    def to_json(self) -> dict:
        return {
            "minpoly": self.minpoly,
            "relations": [{"relation": word, "holds": holds} for word, holds in self.relations_checked],
            "all_hold": self.all_hold(),
            "torsion": self.torsion,
        }


def _b(j: int) -> str:
    return f"b{j}"


def affine_generators(ctx: NumberFieldContext) -> GenSet:
    """â and b_0, ..., b_{d-1} as one-piece maps."""
    table = {A_HAT: PwProjMap.from_moebius(scaling(ctx.gen))}
    for j in range(ctx.degree):
        table[_b(j)] = PwProjMap.from_moebius(translation(ctx.power_of_gen(j)))
    return GenSet("affine", table, ctx)


def affine_relations(ctx: NumberFieldContext) -> list:
    """The relation words, each meant to evaluate to the identity."""
    d = ctx.degree
    coeffs = ctx.minpoly.coeffs
    a = Word.generator(A_HAT)
    b = [Word.generator(_b(j)) for j in range(d)]

    relations = []
    for i in range(d):
        for j in range(i + 1, d):
            relations.append(Word.commutator(b[i], b[j]))
    for j in range(d - 1):
        relations.append(a + b[j] + a.inverse() + b[j + 1].inverse())

    # â b_{d-1}^{α_d} â⁻¹ (b_0^{-α_0} ⋯ b_{d-1}^{-α_{d-1}})⁻¹
    last = a + Word.generator(_b(d - 1), coeffs[d]) + a.inverse()
    for j in reversed(range(d)):
        if coeffs[j]:
            last = last + Word.generator(_b(j), coeffs[j])
    relations.append(last)
    return relations


def check_affine_presentation(ctx: NumberFieldContext) -> PresentationReport:
    """
    Evaluates every relation exactly and computes the torsion of the abelianization.

    Raises:
        LambdaNotGreaterThanOneError: If λ ≤ 1.
    """
    check_lambda(ctx)
    gens = affine_generators(ctx)
    checked = [(str(word), gens.check_relation(word)) for word in affine_relations(ctx)]
    failed = [word for word, holds in checked if not holds]
    if failed:
        logger.log(f"Relations failing for {ctx.minpoly}: {', '.join(failed)}", level=logger.WARNING)
    return PresentationReport(checked, abelianization_torsion(ctx.minpoly), list(ctx.minpoly.coeffs))
