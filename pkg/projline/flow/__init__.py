"""
One-parameter flows through hyperbolic and parabolic Möbius maps, in double precision
with an exact path for parabolic maps.

Example:

```py
from projline.flow import generator_of, flow_at, time_of
from projline.moebius import scaling

L = generator_of(scaling(4))
flow_at(L, 0.5)(1.0)  # 2.0
time_of(L, scaling(2))  # 0.5
```
"""
from projline.flow.floatmap import FloatMoebiusMap, QuadraticField
from projline.flow.generator import (
    FlowGenerator,
    as_generator,
    exact_unipotent,
    flow_at,
    flow_law_defect,
    generator_of,
    normalized_float,
    time_of,
    time_one_defect,
    vector_field,
    verify_time_one,
)
