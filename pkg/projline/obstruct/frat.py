"""
The parabolic piece of T_α c T_α⁻¹, the conjugate of Thurston's c by the translation
t ↦ t + α. On [α, α + 1/2] it acts as

    t ↦ ((1 - α) t + α²) / (-t + 1 + α)

and fixes α, where its germ is parabolic.
"""
from fractions import Fraction

from projline.catalog import preset_thompson_t
from projline.exceptions.all import ObstructError
from projline.moebius import MoebiusMap, translation
from projline.numfield.scalar import as_scalar
from projline.pwhomeo import PwProjMap


def frat_conjugate(alpha) -> PwProjMap:
    """T_α ∘ c ∘ T_α⁻¹."""
    return preset_thompson_t()["c"].conjugate(translation(alpha))


def frat_parabolic_piece(alpha) -> MoebiusMap:
    """
    The displayed matrix [[1 - α, α²], [-1, 1 + α]], checked against the piece of the
    conjugate acting on [α, α + 1/2].

    Raises:
        ObstructError: If the two disagree.
    """
    alpha = as_scalar(alpha)
    displayed = MoebiusMap(1 - alpha, alpha * alpha, -1, 1 + alpha)
    conjugate = frat_conjugate(alpha)
    for p in (alpha, as_scalar(alpha + Fraction(1, 4))):
        if conjugate.piece_map_at(p) != displayed:
            raise ObstructError(f"T_α c T_α⁻¹ does not act by {displayed} at {p}.")
    return displayed
