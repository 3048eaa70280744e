"""
Test cases for the generator catalog and the word engine.
"""
import json
import random
import unittest

from fractions import Fraction

from projline.catalog import (
    GAMMA_HZ,
    GenSet,
    Word,
    chain_elements,
    get_preset,
    monod_element,
    ring_membership,
    preset_f_alpha,
    preset_g_lambda,
    preset_lodha_moore,
    preset_monod_hz,
    preset_thompson_t,
    thompson_f_relations,
    with_thompson_f,
)
from projline.exceptions.all import (
    CatalogError,
    LambdaNotGreaterThanOneError,
    UnknownGeneratorError,
    UnknownPresetError,
    WitnessFailureError,
    WordSyntaxError,
)
from projline.moebius import INF, identity, scaling, translation
from projline.numfield import NumberFieldContext
from projline.pwhomeo import (
    MINUS,
    PLUS,
    Arc,
    PwProjMap,
    c1_defect_points,
    germ_at,
    has_compact_support,
    is_identity_outside,
    linked_pairs,
    support,
)
from projline.settings import SETTINGS


def lambda_contexts() -> list:
    return [
        NumberFieldContext.rational(2),
        NumberFieldContext.rational(3),
        NumberFieldContext([-2, 0, 1], 1, 2),
        NumberFieldContext([-1, -1, 1], 1, 2),
    ]


def random_word(rng: random.Random, names: list, length: int) -> Word:
    return Word([(rng.choice(names), rng.choice([-2, -1, 1, 2])) for _ in range(length)])


class TestWord(unittest.TestCase):
    """
    Parsing and manipulating words.
    """

    def test_parse_and_format(self):
        w = Word.parse("b.a_plus^-1.b^2")
        self.assertEqual(w.letters, (("b", 1), ("a_plus", -1), ("b", 2)))
        self.assertEqual(str(w), "b.a_plus^-1.b^2")
        self.assertEqual(str(w.inverse()), "b^-2.a_plus.b^-1")
        self.assertEqual(Word.parse(""), Word())
        self.assertEqual(str(Word()), "id")
        self.assertEqual(len(w), 4)

    def test_syntax_errors(self):
        for bad in ("b^0", "b..a", "3b", "b^x", "a b"):
            with self.assertRaises(WordSyntaxError, msg=bad):
                Word.parse(bad)

    def test_algebra(self):
        u, v = Word.parse("a"), Word.parse("b")
        self.assertEqual(str(Word.commutator(u, v)), "a.b.a^-1.b^-1")
        self.assertEqual(str(Word.parse("a.b").power(-2)), "b^-1.a^-1.b^-1.a^-1")
        self.assertEqual(str(Word.parse("a.b^2").reversed()), "b^2.a")
        self.assertEqual(Word.parse("a.b.b^-1.a^2").reduced(), Word.parse("a^3"))


class TestThompsonT(unittest.TestCase):
    """
    Thurston's model of Thompson's group T.
    """

    def setUp(self):
        self.T = preset_thompson_t()

    def test_torsion_relations(self):
        self.assertTrue(self.T.check_relation("a^2"))
        self.assertTrue(self.T.check_relation("b^3"))
        self.assertFalse(self.T.check_relation("b"))
        self.assertTrue(self.T.check_relation(""))

    def test_c_is_c1(self):
        self.assertEqual(c1_defect_points(self.T["c"]), [])
        self.assertEqual(self.T["c"].breakpoints(), [0, Fraction(1, 2), 1, INF])

    def test_psl2z_words(self):
        rng = random.Random(SETTINGS["DEFAULT_SEED"])
        for _ in range(20):
            f = self.T.eval_word(random_word(rng, ["a", "b"], 6))
            self.assertEqual(f.breakpoints(), [])
            self.assertTrue(f.maps[0].is_in_psl2z())

    def test_homomorphism(self):
        rng = random.Random(7)
        names = ["a", "b", "c", "translation"]
        for _ in range(10):
            u, v = random_word(rng, names, 3), random_word(rng, names, 3)
            self.assertEqual(self.T.eval_word(u + v), self.T.eval_word(u).compose(self.T.eval_word(v)))

    def test_unknown_generator(self):
        with self.assertRaises(UnknownGeneratorError):
            self.T.eval_word("a.zeta")


class TestGLambda(unittest.TestCase):
    """
    The broken Baumslag-Solitar groups G_λ.
    """

    def test_relations(self):
        for ctx in lambda_contexts():
            G = preset_g_lambda(ctx)
            self.assertTrue(G.check_relation("a_minus.a_plus.a^-1"), ctx)
            self.assertEqual(G.eval_word("a.b.a^-1"), PwProjMap.from_moebius(translation(ctx.gen)))

    def test_baumslag_solitar_relation(self):
        G = preset_g_lambda(NumberFieldContext.rational(2))
        self.assertTrue(G.check_relation("a.b.a^-1.b^-2"))
        self.assertEqual(G.eval_word("a_plus")(-1), -1)
        self.assertEqual(G.eval_word("a_plus")(3), 6)

    def test_commutator_in_germ_kernels(self):
        for ctx in lambda_contexts():
            G = preset_g_lambda(ctx)
            k = G.commutator("b", "a_plus.b.a_plus^-1")
            self.assertFalse(k.is_identity())
            self.assertTrue(has_compact_support(k))
            self.assertTrue(germ_at(k, PLUS).is_identity())
            self.assertTrue(germ_at(k, MINUS).is_identity())
            self.assertTrue(is_identity_outside(k, Arc(-10, 10)))

    def test_thompson_f_relations(self):
        G = with_thompson_f(preset_g_lambda(NumberFieldContext.rational(2)))
        for relation in thompson_f_relations():
            self.assertTrue(G.check_relation(relation), relation)
        # The right-action reading of the same relations.
        x0, x1 = Word.generator("x0"), Word.generator("x1")
        right_action = Word.commutator(x0 + x1.inverse(), x0.inverse() + x1 + x0)
        self.assertTrue(G.check_relation(right_action.reversed()))
        self.assertFalse(G.check_relation("x0.x1.x0^-1.x1^-1"))

    def test_chain_elements(self):
        f1, f2 = chain_elements(preset_g_lambda(NumberFieldContext.rational(2)))
        self.assertEqual(support(f1), [Arc(-1, INF)])
        self.assertEqual(support(f2), [Arc(INF, 1)])

    def test_lambda_must_exceed_one(self):
        with self.assertRaises(LambdaNotGreaterThanOneError):
            preset_g_lambda(NumberFieldContext.rational(Fraction(1, 2)))

    def test_json_round_trip(self):
        G = preset_g_lambda(NumberFieldContext([-2, 0, 1], 1, 2))
        loaded = GenSet.from_json(json.loads(json.dumps(G.to_json())))
        self.assertEqual(loaded.context, G.context)
        for name in G:
            self.assertEqual(loaded[name], G[name])


class TestLodhaMoore(unittest.TestCase):
    """
    The Lodha-Moore generators and the three explicit elements.
    """

    def setUp(self):
        self.G = preset_lodha_moore()

    def test_elements(self):
        x_10 = self.G["x_10"]
        self.assertEqual(x_10(Fraction(1, 3)), Fraction(1, 2))
        self.assertEqual(x_10.piece_map_left_of(Fraction(1, 3))(Fraction(1, 3)), Fraction(1, 2))
        self.assertTrue(is_identity_outside(self.G["y_101"], Arc(Fraction(1, 2), 1)))
        self.assertTrue(is_identity_outside(self.G["y_100_inv_y_101"], Arc(0, 1)))

    def test_d_defects(self):
        self.assertEqual(c1_defect_points(self.G["d"]), [(0, 1, 2), (1, Fraction(1, 2), 1)])


class TestMonod(unittest.TestCase):
    """
    Certified elements of Monod's groups.
    """

    def test_hz_pair_is_linked(self):
        H = preset_monod_hz()
        configs = linked_pairs(H["f"], H["g"])
        self.assertEqual(len(configs), 1)
        low, high = GAMMA_HZ.fixed_points()
        self.assertEqual(configs[0].f_pair, (low, high))

    def test_broken_scaling(self):
        pieces = [(INF, 0, identity()), (0, INF, scaling(4))]
        h = monod_element(pieces, {0: scaling(4)}, ring="Z[1/2]")
        self.assertEqual(h.breakpoints(), [0, INF])
        with self.assertRaises(WitnessFailureError):
            monod_element(pieces, ring="Z[1/2]")
        with self.assertRaises(WitnessFailureError):
            monod_element(pieces, {0: translation(1)}, ring="Z[1/2]")

    def test_integer_checks(self):
        low, high = GAMMA_HZ.fixed_points()
        f = monod_element([(low, high, GAMMA_HZ), (high, low, identity())])
        self.assertEqual(f.breakpoints(), [low, high])
        with self.assertRaises(WitnessFailureError):
            monod_element([(INF, 0, identity()), (0, INF, scaling(2))], {0: scaling(2)})

    def test_non_integral_witnesses_rejected(self):
        c = preset_thompson_t()["c"]
        pieces = c.pieces()
        witnesses = {
            0: scaling(2),
            Fraction(1, 2): [[2, Fraction(-1, 2)], [0, 1]],
            1: [[2, -1], [0, 1]],
        }
        with self.assertRaises(WitnessFailureError):
            monod_element(pieces, witnesses)
        with self.assertRaises(WitnessFailureError):
            monod_element(pieces)

    def test_ring_membership(self):
        in_z = ring_membership("Z")
        self.assertTrue(in_z(GAMMA_HZ))
        self.assertFalse(in_z(scaling(2)))

        in_z_half = ring_membership("Z[1/2]")
        self.assertTrue(in_z_half(scaling(4)))
        self.assertFalse(in_z_half(scaling(2)))
        self.assertFalse(in_z_half(scaling(9)))
        self.assertTrue(ring_membership("Z[1/6]")(scaling(9)))
        self.assertIsNone(ring_membership("Z[sqrt2]"))

    def test_custom_membership(self):
        pieces = [(INF, 0, identity()), (0, INF, scaling(2))]
        with self.assertRaises(WitnessFailureError):
            monod_element(pieces, {0: scaling(2)}, ring="Q")
        h = monod_element(pieces, {0: scaling(2)}, ring="Q", member=lambda m: m.is_rational())
        self.assertEqual(h.breakpoints(), [0, INF])
        with self.assertRaises(WitnessFailureError):
            monod_element(pieces, {0: scaling(2)}, ring="Q", member=lambda m: m.det() == 1)


class TestPresetRegistry(unittest.TestCase):
    """
    Lookup of presets by name.
    """

    def test_lookup(self):
        self.assertEqual(get_preset("thompson_t").name, "thompson_t")
        G = get_preset("g_lambda")
        self.assertEqual(G.context.gen, 2)
        self.assertEqual(get_preset("f-alpha")["t_alpha"](0), Fraction(1, 2))
        with self.assertRaises(UnknownPresetError):
            get_preset("baumslag")

    def test_f_alpha(self):
        ctx = NumberFieldContext([-1, 2, 1], 0, 1)
        F = preset_f_alpha(ctx)
        self.assertEqual(F["t_alpha"](0), ctx.gen)
        with self.assertRaises(CatalogError):
            preset_f_alpha(NumberFieldContext.rational(2))


if __name__ == "__main__":
    unittest.main()
