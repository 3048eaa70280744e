"""
Test cases for piecewise projective homeomorphisms of the circle.
"""
import random
import unittest

from fractions import Fraction

from projline.exceptions.all import (
    ContinuityViolation,
    DoesNotFixInfinityError,
    IdentityInputError,
    InjectivityViolation,
    NonPartitionError,
    OrientationViolation,
    PointNotFixedError,
)
from projline.moebius import INF, MoebiusMap, identity, scaling, translation
from projline.pwhomeo import (
    FULL_CIRCLE,
    MINUS,
    PLUS,
    AffineGerm,
    Arc,
    PwProjMap,
    breakpoints,
    c1_defect_points,
    c2_defect_points,
    compose,
    fixed_set,
    germ_at,
    has_compact_support,
    identity_map,
    inverse,
    is_identity_outside,
    linked_pairs,
    one_sided_derivatives,
    restrict_agrees,
    sample,
    split_at_fixed_point,
    successive_fixed_pairs,
    support,
)
from projline.settings import SETTINGS

GAMMA = MoebiusMap(2, -1, -1, 1)


def thurston_c() -> PwProjMap:
    return PwProjMap.build([
        (INF, 0, identity()),
        (0, Fraction(1, 2), [[1, 0], [-1, 1]]),
        (Fraction(1, 2), 1, [[3, -1], [1, 0]]),
        (1, INF, translation(1)),
    ])


def x10() -> PwProjMap:
    return PwProjMap.build([
        (INF, 0, identity()),
        (0, Fraction(1, 3), [[1, 0], [-1, 1]]),
        (Fraction(1, 3), Fraction(1, 2), [[4, -1], [5, -1]]),
        (Fraction(1, 2), 1, [[0, 1], [-1, 2]]),
        (1, INF, identity()),
    ])


def d_map() -> PwProjMap:
    return PwProjMap.build([(0, 1, [[2, 0], [1, 1]]), (1, 0, identity())])


def a_plus(slope=2) -> PwProjMap:
    return PwProjMap.build([(INF, 0, identity()), (0, INF, scaling(slope))])


def a_minus(slope=2) -> PwProjMap:
    return PwProjMap.build([(INF, 0, scaling(slope)), (0, INF, identity())])


def shift(t) -> PwProjMap:
    return PwProjMap.from_moebius(translation(t))


def gamma_bump() -> PwProjMap:
    """GAMMA between its fixed points, identity elsewhere."""
    low, high = GAMMA.fixed_points()
    return PwProjMap.build([(low, high, GAMMA), (high, low, identity())])


def random_word(rng: random.Random, length: int) -> PwProjMap:
    generators = [thurston_c(), x10(), d_map(), a_plus(), shift(1), PwProjMap.from_moebius(GAMMA)]
    result = identity_map()
    for _ in range(length):
        g = rng.choice(generators)
        result = result.compose(g if rng.random() < 0.5 else g.inverse())
    return result


class TestBuild(unittest.TestCase):
    """
    Validation and normalization of piece data.
    """

    def test_valid_examples(self):
        c = thurston_c()
        self.assertEqual(breakpoints(c), [0, Fraction(1, 2), 1, INF])
        f = x10()
        self.assertEqual(breakpoints(f), [0, Fraction(1, 3), Fraction(1, 2), 1])
        self.assertEqual(f(Fraction(1, 3)), Fraction(1, 2))
        self.assertEqual(f.piece_map_left_of(Fraction(1, 3))(Fraction(1, 3)), Fraction(1, 2))

    def test_continuity_violation(self):
        with self.assertRaises(ContinuityViolation) as ctx:
            PwProjMap.build([(INF, 0, identity()), (0, INF, translation(1))])
        self.assertEqual(ctx.exception.point, 0)

    def test_partition_errors(self):
        with self.assertRaises(NonPartitionError):
            PwProjMap.build([(0, 1, identity())])
        with self.assertRaises(NonPartitionError):
            PwProjMap.build([(INF, 0, identity()), (1, INF, identity())])
        with self.assertRaises(NonPartitionError):
            PwProjMap.build([])

    def test_orientation_and_injectivity(self):
        with self.assertRaises(OrientationViolation):
            PwProjMap.build([(INF, INF, [[0, 1], [1, 0]])])
        # Continuous everywhere, but the breakpoint images 0, 1, 1/2 are out of order.
        with self.assertRaises(InjectivityViolation):
            PwProjMap.build([
                (0, 1, identity()),
                (1, INF, [[1, -3], [2, -4]]),
                (INF, 0, [[1, 0], [2, 2]]),
            ])

    def test_normalization(self):
        merged = PwProjMap.build([(INF, 0, translation(1)), (0, INF, translation(1))])
        self.assertEqual(breakpoints(merged), [])
        self.assertEqual(merged, shift(1))
        c = thurston_c()
        self.assertEqual(PwProjMap(c.starts, c.maps), c)
        self.assertEqual(PwProjMap.build(c.pieces()), c)

    def test_dict_pieces(self):
        f = PwProjMap.build([
            {"from": "inf", "to": "0", "m": [[1, 0], [0, 1]]},
            {"from": "0", "to": "inf", "m": [[2, 0], [0, 1]]},
        ])
        self.assertEqual(f, a_plus())


class TestGroupOperations(unittest.TestCase):
    """
    Evaluation, composition and inversion.
    """

    def test_eval(self):
        c = thurston_c()
        self.assertEqual(c(Fraction(1, 2)), 1)
        self.assertEqual(c(-5), -5)
        self.assertEqual(c(INF), INF)
        self.assertEqual(c(3), 4)

    def test_inverse(self):
        c = thurston_c()
        self.assertTrue(compose(c, inverse(c)).is_identity())
        self.assertTrue(compose(inverse(c), c).is_identity())
        self.assertEqual(inverse(c)(1), Fraction(1, 2))

    def test_non_commuting(self):
        b = shift(1)
        self.assertEqual(compose(b, a_plus())(1), 3)
        self.assertEqual(compose(a_plus(), b)(1), 4)
        self.assertNotEqual(compose(b, a_plus()), compose(a_plus(), b))

    def test_associativity(self):
        rng = random.Random(SETTINGS["DEFAULT_SEED"])
        for _ in range(100):
            f, g, h = (random_word(rng, 2) for _ in range(3))
            self.assertEqual(f.compose(g).compose(h), f.compose(g.compose(h)))
            self.assertTrue(f.compose(f.inverse()).is_identity())

    def test_composition_agrees_pointwise(self):
        rng = random.Random(SETTINGS["DEFAULT_SEED"])
        for _ in range(50):
            f, g = random_word(rng, 2), random_word(rng, 2)
            fg = f.compose(g)
            for _ in range(5):
                p = Fraction(rng.randint(-30, 30), rng.randint(1, 7))
                self.assertEqual(fg(p), f(g(p)))
                self.assertEqual(fg.inverse_apply(fg(p)), p)

    def test_power(self):
        self.assertEqual(shift(1).power(3), shift(3))
        self.assertEqual(a_plus().power(-2), a_plus(Fraction(1, 4)))


class TestDerivatives(unittest.TestCase):
    """
    One-sided derivatives and C¹ / C² defects.
    """

    def test_one_sided(self):
        self.assertEqual(one_sided_derivatives(thurston_c(), Fraction(1, 2)), (4, 4))
        self.assertEqual(one_sided_derivatives(d_map(), 0), (1, 2))

    def test_c1_defects(self):
        self.assertEqual(c1_defect_points(thurston_c()), [])
        self.assertEqual(c1_defect_points(d_map()), [(0, 1, 2), (1, Fraction(1, 2), 1)])
        self.assertEqual(c1_defect_points(identity_map()), [])

    def test_c2_defects(self):
        points = [p for p, _, _ in c2_defect_points(thurston_c())]
        self.assertEqual(points, [0, Fraction(1, 2), 1, INF])
        self.assertEqual(c2_defect_points(shift(1)), [])

    def test_chain_rule_at_breakpoints(self):
        rng = random.Random(SETTINGS["DEFAULT_SEED"])
        for _ in range(50):
            f, g = random_word(rng, 2), random_word(rng, 2)
            fg = f.compose(g)
            points = fg.breakpoints() + g.breakpoints() + [g.inverse_apply(q) for q in f.breakpoints()]
            for p in points:
                left_g, right_g = g.one_sided_derivatives(p)
                left_f, right_f = f.one_sided_derivatives(g(p))
                self.assertEqual(fg.one_sided_derivatives(p), (left_f * left_g, right_f * right_g))

    def test_conjugate_moves_defects(self):
        g = MoebiusMap(2, 1, 1, 1)
        conjugated = d_map().conjugate(g)
        expected = {g(p): left / right for p, left, right in c1_defect_points(d_map())}
        found = {p: left / right for p, left, right in c1_defect_points(conjugated)}
        self.assertEqual(found, expected)


class TestFixedSets(unittest.TestCase):
    """
    Fixed sets, supports and successive fixed pairs.
    """

    def test_supports(self):
        b = translation(1)
        f1 = a_plus().conjugate(b.inverse())
        self.assertEqual(support(f1), [Arc(-1, INF)])
        f2 = a_minus().conjugate(b)
        self.assertEqual(support(f2), [Arc(INF, 1)])
        self.assertEqual(fixed_set(identity_map()), [FULL_CIRCLE])
        self.assertEqual(support(identity_map()), [])
        self.assertEqual(support(PwProjMap.from_moebius(MoebiusMap(0, -1, 1, 0))), [FULL_CIRCLE])

    def test_successive_pairs(self):
        low, high = GAMMA.fixed_points()
        self.assertEqual(successive_fixed_pairs(gamma_bump()), [(low, high)])
        self.assertEqual(successive_fixed_pairs(a_plus()), [(0, INF)])
        self.assertEqual(
            successive_fixed_pairs(PwProjMap.from_moebius(scaling(2))),
            [(0, INF), (INF, 0)],
        )
        self.assertEqual(successive_fixed_pairs(shift(1)), [(INF, INF)])
        with self.assertRaises(IdentityInputError):
            successive_fixed_pairs(identity_map())

    def test_conjugation_moves_fixed_set(self):
        g = MoebiusMap(1, 2, 1, 3)
        for f in (thurston_c(), x10(), gamma_bump(), a_plus()):
            moved = set()
            for item in fixed_set(f):
                if isinstance(item, Arc):
                    moved.add(Arc(g(item.start), g(item.end), closed=True))
                else:
                    moved.add(g(item))
            self.assertEqual(set(fixed_set(f.conjugate(g))), moved)


class TestLinkedPairs(unittest.TestCase):
    """
    Detection of linked pairs of fixed points.
    """

    def test_shifted_bump_is_linked(self):
        f = gamma_bump()
        g = f.conjugate(translation(1))
        configs = linked_pairs(f, g)
        self.assertEqual(len(configs), 1)
        self.assertTrue(configs[0].doubly_linked)
        low, high = GAMMA.fixed_points()
        self.assertEqual(configs[0].f_in_g, (high,))
        self.assertEqual(configs[0].g_in_f, (low + 1,))
        self.assertEqual(linked_pairs(g, f), [configs[0].mirror()])

    def test_not_linked(self):
        self.assertEqual(linked_pairs(a_plus(), a_minus()), [])
        f = gamma_bump()
        self.assertEqual(linked_pairs(f, f.conjugate(translation(10))), [])
        with self.assertRaises(IdentityInputError):
            linked_pairs(identity_map(), f)


class TestGerms(unittest.TestCase):
    """
    Germs at ±∞, compact support and splitting at a fixed point.
    """

    def test_germs(self):
        self.assertEqual(germ_at(a_plus(), PLUS), AffineGerm(2, 0))
        self.assertTrue(germ_at(a_plus(), MINUS).is_identity())
        self.assertEqual(germ_at(shift(1), PLUS), AffineGerm(1, 1))
        with self.assertRaises(DoesNotFixInfinityError):
            germ_at(PwProjMap.from_moebius(GAMMA), PLUS)

    def test_germ_is_homomorphism(self):
        rng = random.Random(5)
        pool = [a_plus(), a_minus(), shift(1), shift(Fraction(1, 2)), a_plus(3)]
        for _ in range(10):
            f, g = rng.choice(pool), rng.choice(pool)
            for side in (PLUS, MINUS):
                self.assertEqual(germ_at(f.compose(g), side), germ_at(f, side).compose(germ_at(g, side)))

    def test_commutator_is_compactly_supported(self):
        b, a = shift(1), a_plus()
        h = a.compose(b).compose(a.inverse())
        commutator = b.compose(h).compose(b.inverse()).compose(h.inverse())
        self.assertFalse(commutator.is_identity())
        self.assertTrue(germ_at(commutator, PLUS).is_identity())
        self.assertTrue(germ_at(commutator, MINUS).is_identity())
        self.assertTrue(has_compact_support(commutator))
        self.assertTrue(is_identity_outside(commutator, Arc(-10, 10)))
        self.assertFalse(is_identity_outside(commutator, Arc(5, 10)))

    def test_split(self):
        self.assertEqual(split_at_fixed_point(PwProjMap.from_moebius(scaling(2)), 0), a_plus())
        with self.assertRaises(PointNotFixedError):
            split_at_fixed_point(a_plus(), 1)
        with self.assertRaises(DoesNotFixInfinityError):
            split_at_fixed_point(PwProjMap.from_moebius(MoebiusMap(0, -1, 1, 0)), 0)

    def test_restrict_agrees(self):
        self.assertTrue(restrict_agrees(a_plus(), PwProjMap.from_moebius(scaling(2)), Arc(0, 5)))
        self.assertFalse(restrict_agrees(a_plus(), PwProjMap.from_moebius(scaling(2)), Arc(-1, 5)))

    def test_sample(self):
        lines = sample(a_plus(), 3, -1, 1).splitlines()
        self.assertEqual(lines[0], "t,F(t)")
        self.assertEqual(len(lines), 4)
        values = [tuple(float(v) for v in line.split(",")) for line in lines[1:]]
        self.assertEqual(values, [(-1.0, -1.0), (0.0, 0.0), (1.0, 2.0)])


if __name__ == "__main__":
    unittest.main()
