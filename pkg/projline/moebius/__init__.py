"""
Möbius transformations over exact scalars: projective action, classification by
trace, fixed points, derivatives in circle charts, and the P_Z / H_Z predicates.
"""
from projline.moebius.point import (
    INF,
    Infinity,
    arc_position,
    as_point,
    circle_key,
    cyclic_order,
    format_point,
    in_closed_arc,
    in_open_arc,
    is_infinity,
)
from projline.moebius.transform import (
    CHART,
    ConjClass,
    MoebiusMap,
    as_moebius,
    from_three_points,
    identity,
    scaling,
    translation,
)
from projline.moebius.breakpoints import (
    hyperbolic_fixed_point_witness,
    is_hyperbolic_fixed_point_Z,
    is_parabolic_fixed_point_Z,
)
