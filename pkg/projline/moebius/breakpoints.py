"""
Membership predicates for the breakpoint sets P_Z and H_Z.

P_Z holds the fixed points of parabolic elements of PSL(2, Z), which are exactly the
rationals and ∞. H_Z holds the fixed points of hyperbolic elements of PSL(2, Z); every
real quadratic irrational is one (its continued fraction is eventually periodic), and
no other point is, so membership reduces to the algebraic degree being 2.
"""
from projline.moebius.point import INF, as_point
from projline.moebius.transform import ConjClass, MoebiusMap
from projline.numfield import scalar


def is_parabolic_fixed_point_Z(p) -> bool:
    p = as_point(p)
    return p is INF or scalar.is_rational(p)


def is_hyperbolic_fixed_point_Z(p) -> bool:
    p = as_point(p)
    return p is not INF and scalar.algebraic_degree(p) == 2


def hyperbolic_fixed_point_witness(p, gamma: MoebiusMap, member=None) -> bool:
    """
    True iff gamma is hyperbolic and fixes p, certifying p ∈ H_Γ for any Γ ∋ gamma.

    When given, member(gamma) must also hold, restricting Γ to the group it tests.
    """
    if member is not None and not member(gamma):
        return False
    return gamma.classify() is ConjClass.HYPERBOLIC and gamma.apply(p) == as_point(p)
