"""
Test cases for Möbius transformations and points of the projective line.
"""
import random
import unittest

from fractions import Fraction

from projline.exceptions.all import (
    DegenerateMatrixError,
    IdentityInputError,
    NonDistinctPointsError,
    OrientationViolation,
)
from projline.moebius import (
    INF,
    ConjClass,
    MoebiusMap,
    arc_position,
    cyclic_order,
    from_three_points,
    hyperbolic_fixed_point_witness,
    identity,
    is_hyperbolic_fixed_point_Z,
    is_parabolic_fixed_point_Z,
    scaling,
    translation,
)
from projline.numfield import RealAlgebraic
from projline.settings import SETTINGS

GAMMA = MoebiusMap(2, -1, -1, 1)


def golden_conjugate():
    """(-1 + √5) / 2."""
    return RealAlgebraic([-1, 1, 1], 0, 1)


def random_map(rng: random.Random) -> MoebiusMap:
    while True:
        a, b, c, d = (rng.randint(-5, 5) for _ in range(4))
        if a * d - b * c > 0:
            return MoebiusMap(a, b, c, d)


def random_point(rng: random.Random):
    if rng.random() < 0.1:
        return INF
    return Fraction(rng.randint(-20, 20), rng.randint(1, 6))


class TestAction(unittest.TestCase):
    """
    Projective action, composition and inversion.
    """

    def test_apply(self):
        self.assertEqual(translation(1)(0), 1)
        self.assertEqual(GAMMA(0), -1)
        self.assertEqual(MoebiusMap(1, 0, 1, 1)(INF), 1)
        self.assertIs(MoebiusMap(1, 0, 1, 1)(-1), INF)
        self.assertIs(translation(3)(INF), INF)

    def test_compose_and_inverse(self):
        self.assertTrue(translation(1).compose(translation(-1)).is_identity())
        self.assertEqual(scaling(2).inverse(), MoebiusMap(1, 0, 0, 2))
        self.assertEqual(scaling(2).compose(translation(1))(0), 2)

    def test_projective_equality(self):
        a = MoebiusMap(0, -1, 1, 0)
        self.assertEqual(a.compose(a), identity())
        self.assertEqual(MoebiusMap(2, 4, 0, 2), translation(2))
        self.assertEqual(hash(MoebiusMap(2, 4, 0, 2)), hash(translation(2)))
        self.assertEqual(MoebiusMap(-1, 0, 0, -1), identity())

    def test_validation(self):
        with self.assertRaises(DegenerateMatrixError):
            MoebiusMap(1, 2, 2, 4)
        with self.assertRaises(OrientationViolation):
            MoebiusMap(0, 1, 1, 0)

    def test_irrational_entries(self):
        root = golden_conjugate()
        m = MoebiusMap(root, 0, 0, 1)
        self.assertEqual(m(2), 2 * root)
        self.assertEqual(m.inverse()(2 * root), 2)


class TestClassification(unittest.TestCase):
    """
    Trace classification and fixed points.
    """

    def test_classify(self):
        self.assertIs(GAMMA.classify(), ConjClass.HYPERBOLIC)
        self.assertIs(translation(1).classify(), ConjClass.PARABOLIC)
        self.assertIs(MoebiusMap(0, 1, -1, 0).classify(), ConjClass.ELLIPTIC)
        self.assertIs(identity().classify(), ConjClass.IDENTITY)

    def test_gamma_fixed_points(self):
        low, high = GAMMA.fixed_points()
        self.assertLess(low, Fraction(-3, 2))
        self.assertGreater(high, Fraction(1, 2))
        self.assertLess(high, 1)
        self.assertEqual(high, golden_conjugate())

    def test_fixed_points(self):
        self.assertEqual(translation(1).fixed_points(), [INF])
        self.assertEqual(scaling(2).fixed_points(), [0, INF])
        self.assertEqual(MoebiusMap(0, 1, -1, 0).fixed_points(), [])
        with self.assertRaises(IdentityInputError):
            identity().fixed_points()

    def test_conjugation_invariance(self):
        rng = random.Random(SETTINGS["DEFAULT_SEED"])
        for _ in range(30):
            m, g = random_map(rng), random_map(rng)
            self.assertIs(m.conjugate(g).classify(), m.classify())

    def test_inverse_has_same_fixed_points(self):
        rng = random.Random(1)
        for _ in range(20):
            m = random_map(rng)
            if m.is_identity():
                continue
            self.assertEqual(m.inverse().fixed_points(), m.fixed_points())


class TestDerivatives(unittest.TestCase):
    """
    Derivatives in the charts of the circle.
    """

    def test_examples(self):
        self.assertEqual(scaling(2).derivative_at(0), 2)
        self.assertEqual(MoebiusMap(1, 0, -1, 1).derivative_at(Fraction(1, 2)), 4)
        self.assertEqual(scaling(2).derivative_at(INF), Fraction(1, 2))

    def test_chain_rule(self):
        rng = random.Random(SETTINGS["DEFAULT_SEED"])
        for _ in range(60):
            m, n, p = random_map(rng), random_map(rng), random_point(rng)
            expected = m.derivative_at(n(p)) * n.derivative_at(p)
            self.assertEqual(m.compose(n).derivative_at(p), expected)

    def test_hyperbolic_fixed_point_derivatives(self):
        low, high = GAMMA.fixed_points()
        self.assertEqual(GAMMA.derivative_at(low) * GAMMA.derivative_at(high), 1)

    def test_second_derivative(self):
        # t/(1-t) has second derivative 2/(1-t)^3.
        self.assertEqual(MoebiusMap(1, 0, -1, 1).second_derivative_at(Fraction(1, 2)), 16)
        self.assertEqual(translation(5).second_derivative_at(3), 0)


class TestBreakpointSets(unittest.TestCase):
    """
    P_Z and H_Z membership and the PSL(2, Z) test.
    """

    def test_psl2z(self):
        self.assertTrue(GAMMA.is_in_psl2z())
        self.assertFalse(scaling(2).is_in_psl2z())
        self.assertTrue(MoebiusMap(4, -1, 5, -1).is_in_psl2z())
        self.assertTrue(MoebiusMap(-2, 1, 1, -1).is_in_psl2z())

    def test_membership(self):
        self.assertTrue(is_parabolic_fixed_point_Z(Fraction(3, 7)))
        self.assertFalse(is_hyperbolic_fixed_point_Z(Fraction(3, 7)))
        self.assertTrue(is_hyperbolic_fixed_point_Z(golden_conjugate()))
        self.assertTrue(is_parabolic_fixed_point_Z(INF))
        self.assertFalse(is_hyperbolic_fixed_point_Z(INF))

    def test_witness(self):
        self.assertTrue(hyperbolic_fixed_point_witness(0, scaling(2)))
        self.assertFalse(hyperbolic_fixed_point_witness(1, translation(1)))
        self.assertTrue(hyperbolic_fixed_point_witness(golden_conjugate(), GAMMA))

    def test_witness_membership(self):
        in_z = MoebiusMap.is_in_psl2z
        self.assertFalse(hyperbolic_fixed_point_witness(0, scaling(2), in_z))
        self.assertFalse(hyperbolic_fixed_point_witness(Fraction(1, 2), MoebiusMap(4, -1, 0, 2), in_z))
        self.assertTrue(hyperbolic_fixed_point_witness(golden_conjugate(), GAMMA, in_z))


class TestCyclicOrder(unittest.TestCase):
    """
    Orientation of the circle through ∞.
    """

    def test_examples(self):
        self.assertTrue(cyclic_order(0, 1, 2))
        self.assertTrue(cyclic_order(1, INF, 0))
        self.assertFalse(cyclic_order(2, 1, 0))
        with self.assertRaises(NonDistinctPointsError):
            cyclic_order(1, 1, 2)

    def test_invariance(self):
        rng = random.Random(2)
        for _ in range(40):
            m = random_map(rng)
            a, b, c = (random_point(rng) for _ in range(3))
            if len({a, b, c}) < 3:
                continue
            self.assertEqual(cyclic_order(a, b, c), cyclic_order(m(a), m(b), m(c)))

    def test_arc_position(self):
        points = [Fraction(-3), INF, Fraction(5), Fraction(1), Fraction(2)]
        self.assertEqual(sorted(points, key=lambda p: arc_position(p, Fraction(1))), [1, 2, 5, INF, -3])
        self.assertEqual(sorted(points, key=lambda p: arc_position(p, INF)), [INF, -3, 1, 2, 5])


class TestThreePoints(unittest.TestCase):
    """
    Maps determined by three points.
    """

    def test_from_three_points(self):
        m = from_three_points(0, 1, INF, 1, 2, INF)
        self.assertEqual(m, translation(1))
        m = from_three_points(INF, 0, 1, 0, 1, 2)
        for p, q in ((INF, 0), (0, 1), (1, 2)):
            self.assertEqual(m(p), q)

    def test_errors(self):
        with self.assertRaises(NonDistinctPointsError):
            from_three_points(0, 0, 1, 1, 2, 3)
        with self.assertRaises(OrientationViolation):
            from_three_points(0, 1, 2, 2, 1, 0)


if __name__ == "__main__":
    unittest.main()
