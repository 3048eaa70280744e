"""
Test cases for Möbius flows.
"""
import math
import random
import unittest

from fractions import Fraction

import numpy

from projline.exceptions.all import EllipticInputError, FlowError, NotInFlowError, TrivialFlowError
from projline.flow import (
    FloatMoebiusMap,
    QuadraticField,
    flow_at,
    flow_law_defect,
    generator_of,
    time_of,
    time_one_defect,
    vector_field,
    verify_time_one,
)
from projline.moebius import INF, MoebiusMap, scaling, translation
from projline.numfield import to_float
from projline.settings import SETTINGS
from projline.suites.flows import random_flow_map

UNIPOTENT = MoebiusMap(1, 0, 1, 1)


def random_parabolic(rng: random.Random) -> MoebiusMap:
    g = MoebiusMap(1, 0, rng.randint(-2, 2), 1).compose(translation(rng.randint(-3, 3)))
    return translation(rng.choice([-2, -1, 1, 2])).conjugate(g)


class TestGenerator(unittest.TestCase):
    """
    Logarithms of hyperbolic and parabolic maps.
    """

    def test_unipotent(self):
        generator = generator_of(UNIPOTENT)
        self.assertEqual(generator.exact_nilpotent, ((0, 0), (1, 0)))
        self.assertTrue(numpy.array_equal(generator.L, numpy.array([[0.0, 0.0], [1.0, 0.0]])))

    def test_parabolic_with_negative_trace(self):
        generator = generator_of(MoebiusMap(-1, 0, -1, -1))
        self.assertEqual(generator.exact_nilpotent, ((0, 0), (1, 0)))

    def test_diagonal(self):
        generator = generator_of(MoebiusMap(2, 0, 0, Fraction(1, 2)))
        self.assertIsNone(generator.exact_nilpotent)
        ln2 = math.log(2)
        self.assertTrue(numpy.allclose(generator.L, [[ln2, 0], [0, -ln2]], atol=1e-12))

    def test_scaling_is_normalized(self):
        generator = generator_of(scaling(4))
        ln2 = math.log(2)
        self.assertTrue(numpy.allclose(generator.L, [[ln2, 0], [0, -ln2]], atol=1e-12))

    def test_trace_free(self):
        rng = random.Random(SETTINGS["DEFAULT_SEED"])
        for _ in range(30):
            generator = generator_of(random_flow_map(rng))
            self.assertLessEqual(abs(numpy.trace(generator.L)), 1e-12)
            if generator.exact_nilpotent is not None:
                (a, b), (c, d) = generator.exact_nilpotent
                self.assertEqual((a * a + b * c, a * b + b * d, c * a + d * c, c * b + d * d), (0, 0, 0, 0))

    def test_elliptic(self):
        with self.assertRaises(EllipticInputError):
            generator_of(MoebiusMap(0, -1, 1, 0))

    def test_identity(self):
        with self.assertRaises(TrivialFlowError):
            generator_of(MoebiusMap(3, 0, 0, 3))


class TestFlowAt(unittest.TestCase):
    """
    Flow maps and vector fields.
    """

    def test_nilpotent_flow(self):
        generator = generator_of(UNIPOTENT)
        m = flow_at(generator, Fraction(1, 2))
        self.assertTrue(numpy.array_equal(m.matrix, numpy.array([[1.0, 0.0], [0.5, 1.0]])))
        self.assertEqual(m(2.0), 1.0)
        self.assertEqual(flow_at(generator, 3).distance([[1, 0], [3, 1]]), 0.0)

    def test_nilpotent_field(self):
        field = vector_field(UNIPOTENT)
        self.assertEqual((field.q0, field.q1, field.q2), (0.0, 0.0, -1.0))
        self.assertEqual(field(3.0), -9.0)

    def test_scaling_flow(self):
        ln2 = math.log(2)
        m = flow_at([[ln2, 0], [0, -ln2]], 1)
        self.assertLessEqual(m.distance([[2, 0], [0, 0.5]]), 1e-12)
        self.assertAlmostEqual(m(1.0), 4.0, places=10)
        field = vector_field([[ln2, 0], [0, -ln2]])
        self.assertAlmostEqual(field.q1, 2 * ln2, places=12)
        self.assertEqual(field.zeros(), [0.0])

    def test_time_zero(self):
        rng = random.Random(2)
        for _ in range(10):
            generator = generator_of(random_flow_map(rng))
            self.assertLessEqual(flow_at(generator, 0.0).distance(numpy.eye(2)), 1e-15)

    def test_float_map_infinity(self):
        m = FloatMoebiusMap([[1.0, 0.0], [1.0, 1.0]])
        self.assertEqual(m(math.inf), 1.0)
        self.assertEqual(m(-1.0), math.inf)
        self.assertEqual(FloatMoebiusMap(numpy.eye(2))(math.inf), math.inf)

    def test_quadratic_zeros(self):
        lo, hi = QuadraticField(-1, 0, 1).zeros()
        self.assertAlmostEqual(lo, -1.0, places=12)
        self.assertAlmostEqual(hi, 1.0, places=12)
        self.assertEqual(QuadraticField(1, 0, 1).zeros(), [])
        self.assertEqual(QuadraticField(2, 0, 0).zeros(), [])


class TestTimeOf(unittest.TestCase):
    """
    Times at which a map lies on a flow.
    """

    def test_square_root_of_scaling(self):
        s = time_of(generator_of(scaling(4)), scaling(2))
        self.assertLessEqual(abs(s - 0.5), 1e-12)

    def test_nilpotent_ratio(self):
        s = time_of(generator_of(UNIPOTENT), MoebiusMap(1, 0, Fraction(3, 2), 1))
        self.assertAlmostEqual(s, 1.5, places=12)

    def test_inverse_time(self):
        s = time_of(generator_of(scaling(2)), scaling(Fraction(1, 4)))
        self.assertLessEqual(abs(s + 2), 1e-10)

    def test_not_in_flow(self):
        with self.assertRaises(NotInFlowError):
            time_of(generator_of(scaling(4)), translation(1))
        with self.assertRaises(NotInFlowError):
            time_of(generator_of(UNIPOTENT), scaling(2))
        with self.assertRaises(NotInFlowError):
            time_of(generator_of(UNIPOTENT), translation(1))

    def test_identity_time(self):
        self.assertEqual(time_of(generator_of(scaling(3)), MoebiusMap(1, 0, 0, 1)), 0.0)

    def test_zero_generator(self):
        zero = numpy.zeros((2, 2))
        self.assertTrue(vector_field(zero).is_zero())
        for target in (translation(1), scaling(2), MoebiusMap(1, 0, 0, 1)):
            with self.assertRaises(TrivialFlowError):
                time_of(zero, target)
        self.assertTrue(issubclass(TrivialFlowError, FlowError))

    def test_time_is_finite(self):
        s = time_of(generator_of(UNIPOTENT), UNIPOTENT.compose(UNIPOTENT))
        self.assertTrue(math.isfinite(s))
        self.assertAlmostEqual(s, 2.0, places=12)
        self.assertTrue(math.isfinite(time_of(generator_of(scaling(2)), scaling(Fraction(1, 4)))))


class TestFlowProperties(unittest.TestCase):
    """
    Time-one reproduction, the flow law and zeros of the vector field.
    """

    def test_time_one(self):
        rng = random.Random(SETTINGS["DEFAULT_SEED"])
        for _ in range(50):
            m = random_flow_map(rng)
            self.assertTrue(verify_time_one(m, 1e-10), m)

    def test_parabolic_path_is_exact(self):
        rng = random.Random(7)
        for _ in range(20):
            self.assertEqual(time_one_defect(random_parabolic(rng)), 0.0)

    def test_flow_law(self):
        rng = random.Random(SETTINGS["DEFAULT_SEED"])
        for _ in range(50):
            generator = generator_of(random_flow_map(rng))
            s, u = rng.uniform(-3, 3), rng.uniform(-3, 3)
            self.assertLessEqual(flow_law_defect(generator, s, u), 1e-9)

    def test_field_vanishes_at_fixed_points(self):
        rng = random.Random(3)
        for _ in range(50):
            m = random_flow_map(rng)
            field = vector_field(generator_of(m))
            for p in m.fixed_points():
                if p is INF:
                    self.assertLessEqual(abs(field.q2), 1e-9)
                else:
                    self.assertLessEqual(abs(field(to_float(p))), 1e-9, m)


if __name__ == "__main__":
    unittest.main()
