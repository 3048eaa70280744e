"""
Audits of the ingredients of the smoothing obstructions: linked pairs of fixed points,
one-sided hyperbolic breakpoints, the germ morphisms ρ_± at infinity, the presentation
of the affine groups A_λ and the hypotheses of the C² criterion.
"""
from projline.obstruct.audit import (
    LEFT_HYPERBOLIC,
    RIGHT_HYPERBOLIC,
    HyperbolicBreak,
    ObstructionReport,
    audit_pair,
    hyperbolic_breaks,
    hz_linked_report,
    in_rho_kernel,
    rho,
)
from projline.obstruct.presentation import (
    PresentationReport,
    affine_generators,
    affine_relations,
    check_affine_presentation,
)
from projline.obstruct.nonc2 import (
    DEPENDENT,
    INDETERMINATE,
    RANK_TWO,
    RANK_TWO_UP_TO_BOUND,
    NonC2Report,
    check_nonc2_hypotheses,
    germ_rank,
    multiplicative_relation,
    rational_multipliers_independent,
)
from projline.obstruct.frat import frat_conjugate, frat_parabolic_piece
