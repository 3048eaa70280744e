"""
Piecewise projective homeomorphisms of the circle: validated construction, the group
operations, breakpoints and derivative jumps, fixed sets, supports, linked pairs of
fixed points and germs at infinity.
"""
from projline.pwhomeo.arcs import FULL_CIRCLE, AffineGerm, Arc, LinkedConfig, Piece
from projline.pwhomeo.homeo import (
    PwProjMap,
    breakpoints,
    build,
    c1_defect_points,
    c2_defect_points,
    compose,
    equal,
    evaluate,
    identity_map,
    inverse,
    one_sided_derivatives,
)
from projline.pwhomeo.dynamics import (
    MINUS,
    PLUS,
    fixed_set,
    germ_at,
    has_compact_support,
    is_identity_outside,
    linked_pairs,
    restrict_agrees,
    sample,
    split_at_fixed_point,
    successive_fixed_pairs,
    support,
)
