"""
Test cases for the obstruction audits.
"""
import random
import unittest

from fractions import Fraction

from projline.catalog import Word, preset_g_lambda, preset_monod_hz, preset_thompson_t
from projline.exceptions.all import (
    DoesNotFixInfinityError,
    LambdaNotGreaterThanOneError,
    ObstructError,
)
from projline.moebius import INF, ConjClass, MoebiusMap, scaling, translation
from projline.numfield import NumberFieldContext
from projline.obstruct import (
    DEPENDENT,
    INDETERMINATE,
    LEFT_HYPERBOLIC,
    RANK_TWO,
    RANK_TWO_UP_TO_BOUND,
    RIGHT_HYPERBOLIC,
    HyperbolicBreak,
    audit_pair,
    check_affine_presentation,
    check_nonc2_hypotheses,
    frat_conjugate,
    frat_parabolic_piece,
    hz_linked_report,
    in_rho_kernel,
    multiplicative_relation,
    rho,
)
from projline.pwhomeo import MINUS, PLUS, AffineGerm, PwProjMap, has_compact_support
from projline.settings import SETTINGS
from projline.utils import codec


def compact_f_element() -> PwProjMap:
    """[c, T c T⁻¹] in Thurston's model of F, C¹ and supported inside (0, 4)."""
    T = preset_thompson_t().extend("c_shifted", preset_thompson_t()["c"].conjugate(translation(1)))
    return T.commutator("c", "c_shifted")


def random_g_word(rng: random.Random, length: int) -> Word:
    names = ["a", "a_plus", "b"]
    return Word([(rng.choice(names), rng.choice([-1, 1])) for _ in range(length)])


class TestAuditPair(unittest.TestCase):
    """
    Linked configurations and one-sided hyperbolic breakpoints.
    """

    def test_hz_pair(self):
        report = hz_linked_report()
        self.assertTrue(report.linked)
        self.assertTrue(report.linked[0].doubly_linked)
        self.assertEqual(report.names, ("f", "g"))
        data = codec.jsonable(report)
        self.assertEqual(data["names"], ["f", "g"])
        self.assertTrue(data["linked"][0]["doubly_linked"])

    def test_a_plus_against_itself(self):
        a_plus = preset_g_lambda(NumberFieldContext.rational(2))["a_plus"]
        report = audit_pair("a_plus", a_plus, "a_plus", a_plus)
        self.assertEqual(report.linked, [])
        self.assertIn(HyperbolicBreak("a_plus", 0, 1, 2, RIGHT_HYPERBOLIC), report.hyperbolic_breaks)
        self.assertIn(HyperbolicBreak("a_plus", INF, Fraction(1, 2), 1, LEFT_HYPERBOLIC), report.hyperbolic_breaks)
        self.assertEqual(len(report.hyperbolic_breaks), 2)

    def test_disjoint_supports(self):
        k = compact_f_element()
        self.assertFalse(k.is_identity())
        self.assertTrue(has_compact_support(k))
        far = k.conjugate(translation(5))
        report = audit_pair("k", k, "far", far)
        self.assertTrue(report.is_empty())

    def test_symmetry(self):
        H = preset_monod_hz()
        G = preset_g_lambda(NumberFieldContext.rational(2))
        pairs = [(H["f"], H["g"]), (H["g"], H["gamma"]), (G["a_plus"], G["b"]), (G["a"], G["a_minus"])]
        for f, g in pairs:
            self.assertEqual(bool(audit_pair("f", f, "g", g).linked), bool(audit_pair("g", g, "f", f).linked))


class TestRho(unittest.TestCase):
    """
    The germ morphisms at infinity on G_λ.
    """

    def setUp(self):
        self.G = preset_g_lambda(NumberFieldContext.rational(2))

    def test_values(self):
        self.assertTrue(rho(self.G["a_minus"], PLUS).is_identity())
        self.assertTrue(rho(self.G["a_plus"], MINUS).is_identity())
        self.assertEqual(rho(self.G["b"], MINUS), AffineGerm(1, 1))
        k = self.G.commutator("b", "a_plus.b.a_plus^-1")
        self.assertTrue(in_rho_kernel(k, PLUS))
        self.assertTrue(in_rho_kernel(k, MINUS))

    def test_homomorphism(self):
        rng = random.Random(SETTINGS["DEFAULT_SEED"])
        for _ in range(100):
            f = self.G.eval_word(random_g_word(rng, 3))
            g = self.G.eval_word(random_g_word(rng, 3))
            for side in (PLUS, MINUS):
                self.assertEqual(rho(f.compose(g), side), rho(f, side).compose(rho(g, side)))

    def test_kernels_and_compact_support(self):
        rng = random.Random(4)
        words = [random_g_word(rng, 4) for _ in range(40)]
        words += [Word.commutator(random_g_word(rng, 2), random_g_word(rng, 2)) for _ in range(10)]
        for word in words:
            w = self.G.eval_word(word)
            both = in_rho_kernel(w, PLUS) and in_rho_kernel(w, MINUS)
            self.assertEqual(both, has_compact_support(w), str(word))

    def test_requires_fixed_infinity(self):
        with self.assertRaises(DoesNotFixInfinityError):
            rho(preset_thompson_t()["a"], PLUS)


class TestAffinePresentation(unittest.TestCase):
    """
    The relations of A_λ and the torsion of its abelianization.
    """

    def test_contexts(self):
        cases = [
            (NumberFieldContext.rational(2), 1),
            (NumberFieldContext.rational(3), 2),
            (NumberFieldContext([-2, 0, 1], 1, 2), 1),
            (NumberFieldContext([-1, -1, 1], 1, 2), 1),
            (NumberFieldContext([-2, 0, 0, 1], 1, 2), 1),
        ]
        for ctx, torsion in cases:
            report = check_affine_presentation(ctx)
            self.assertTrue(report.all_hold(), ctx)
            self.assertEqual(report.torsion, torsion, ctx)
            self.assertEqual(len(report.relations_checked), ctx.degree * (ctx.degree + 1) // 2)

    def test_baumslag_solitar_relation(self):
        report = check_affine_presentation(NumberFieldContext.rational(2))
        self.assertEqual(report.relations_checked, [("a_hat.b0.a_hat^-1.b0^-2", True)])

    def test_square_root_two(self):
        report = check_affine_presentation(NumberFieldContext([-2, 0, 1], 1, 2))
        self.assertIn(("a_hat.b1.a_hat^-1.b0^-2", True), report.relations_checked)

    def test_lambda_must_exceed_one(self):
        with self.assertRaises(LambdaNotGreaterThanOneError):
            check_affine_presentation(NumberFieldContext.rational(Fraction(2, 3)))


class TestNonC2(unittest.TestCase):
    """
    The hypotheses of the C² criterion.
    """

    def test_irrational_translations(self):
        ctx = NumberFieldContext([-2, 0, 1], 1, 2)
        alpha = ctx.gen - 1
        f = PwProjMap.from_moebius(translation(-1))
        g = PwProjMap.from_moebius(translation(-alpha))
        report = check_nonc2_hypotheses(f, g, 0, base=INF)
        self.assertTrue(report.contractions)
        self.assertTrue(report.commute)
        self.assertEqual(report.rank, RANK_TWO)
        self.assertTrue(report.holds())

    def test_commensurable_translations(self):
        f = PwProjMap.from_moebius(translation(-1))
        g = PwProjMap.from_moebius(translation(Fraction(-1, 2)))
        report = check_nonc2_hypotheses(f, g, 0, base=INF)
        self.assertTrue(report.contractions and report.commute)
        self.assertEqual(report.rank, DEPENDENT)
        self.assertFalse(report.holds())

    def test_non_commuting(self):
        f = PwProjMap.from_moebius(scaling(Fraction(1, 2)))
        g = PwProjMap.from_moebius(translation(1))
        report = check_nonc2_hypotheses(f, g, 1)
        self.assertFalse(report.commute)
        self.assertFalse(report.contractions)
        self.assertEqual(report.rank, INDETERMINATE)

    def test_scalings(self):
        half = PwProjMap.from_moebius(scaling(Fraction(1, 2)))
        third = PwProjMap.from_moebius(scaling(Fraction(1, 3)))
        quarter = PwProjMap.from_moebius(scaling(Fraction(1, 4)))
        self.assertEqual(check_nonc2_hypotheses(half, third, 1).rank, RANK_TWO)
        self.assertEqual(check_nonc2_hypotheses(half, quarter, 1).rank, DEPENDENT)

    def test_bounded_search(self):
        golden = NumberFieldContext([-1, -1, 1], 1, 2).gen
        f = PwProjMap.from_moebius(scaling(1 / golden))
        g = PwProjMap.from_moebius(scaling(Fraction(1, 2)))
        report = check_nonc2_hypotheses(f, g, 1, bound=8)
        self.assertEqual(report.rank, RANK_TWO_UP_TO_BOUND)
        self.assertEqual(report.bound, 8)

        root2 = NumberFieldContext([-2, 0, 1], 1, 2).gen
        self.assertEqual(multiplicative_relation(root2, Fraction(2), 8), (2, -1))

    def test_contraction_must_avoid_breakpoints(self):
        c = preset_thompson_t()["c"]
        report = check_nonc2_hypotheses(c, c, 1, base=INF)
        self.assertFalse(report.contractions)

    def test_degenerate_arc(self):
        f = PwProjMap.from_moebius(scaling(Fraction(1, 2)))
        with self.assertRaises(ObstructError):
            check_nonc2_hypotheses(f, f, 0)


class TestFratPiece(unittest.TestCase):
    """
    The parabolic piece of the conjugate of c by a translation.
    """

    def test_rational_alpha(self):
        alpha = Fraction(1, 3)
        piece = frat_parabolic_piece(alpha)
        self.assertEqual(piece, MoebiusMap(Fraction(2, 3), Fraction(1, 9), -1, Fraction(4, 3)))
        self.assertEqual(piece.classify(), ConjClass.PARABOLIC)
        self.assertEqual(piece(alpha), alpha)
        self.assertEqual(frat_conjugate(alpha).breakpoints(), [alpha, alpha + Fraction(1, 2), alpha + 1, INF])

    def test_quadratic_alpha(self):
        ctx = NumberFieldContext([-2, 0, 1], 1, 2)
        alpha = ctx.gen - 1
        piece = frat_parabolic_piece(alpha)
        self.assertEqual(piece.classify(), ConjClass.PARABOLIC)
        self.assertEqual(piece(alpha), alpha)


if __name__ == "__main__":
    unittest.main()
