"""
Numeric checks of the Möbius flows.
"""
import random

from projline.flow import flow_law_defect, generator_of, time_of, time_one_defect, vector_field
from projline.moebius import ConjClass, MoebiusMap, scaling, translation
from projline.settings import SETTINGS


def random_flow_map(rng: random.Random) -> MoebiusMap:
    """A hyperbolic or parabolic map with integer entries of height at most 10."""
    while True:
        if rng.random() < 0.3:
            g = MoebiusMap(1, 0, rng.randint(-2, 2), 1).compose(translation(rng.randint(-3, 3)))
            m = translation(rng.choice([-2, -1, 1, 2])).conjugate(g)
        else:
            a, b, c, d = (rng.randint(-10, 10) for _ in range(4))
            if a * d - b * c <= 0:
                continue
            m = MoebiusMap(a, b, c, d)
        if max(abs(x) for x in m.entries) > 10:
            continue
        if m.classify() in (ConjClass.HYPERBOLIC, ConjClass.PARABOLIC):
            return m


def time_one() -> bool:
    rng = random.Random(SETTINGS["DEFAULT_SEED"])
    return all(time_one_defect(random_flow_map(rng)) <= SETTINGS["FLOW_TOLERANCE"] for _ in range(50))


def parabolic_path_exact() -> bool:
    rng = random.Random(SETTINGS["DEFAULT_SEED"])
    maps = [m for m in (random_flow_map(rng) for _ in range(50)) if m.classify() == ConjClass.PARABOLIC]
    maps.append(MoebiusMap(1, 0, 1, 1))
    return all(time_one_defect(m) == 0.0 for m in maps)


def unipotent_field() -> bool:
    field = vector_field(generator_of(MoebiusMap(1, 0, 1, 1)))
    return (field.q0, field.q1, field.q2) == (0.0, 0.0, -1.0)


def square_root_of_scaling() -> bool:
    return abs(time_of(generator_of(scaling(4)), scaling(2)) - 0.5) <= 1e-12


def flow_law() -> bool:
    rng = random.Random(SETTINGS["DEFAULT_SEED"])
    for _ in range(50):
        generator = generator_of(random_flow_map(rng))
        if flow_law_defect(generator, rng.uniform(-3, 3), rng.uniform(-3, 3)) > 1e-9:
            return False
    return True


def checks() -> list:
    return [
        ("time-one", time_one),
        ("parabolic-exact", parabolic_path_exact),
        ("unipotent-field", unipotent_field),
        ("square-root-of-scaling", square_root_of_scaling),
        ("flow-law", flow_law),
    ]
