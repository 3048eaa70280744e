"""
Test cases for the worked example scripts.
"""
import unittest

from fractions import Fraction

from click.testing import CliRunner

from projline.examples.frat_parabolic import frat_report, main
from projline.moebius import INF, ConjClass
from projline.utils import codec


class TestFratExample(unittest.TestCase):
    """
    The parabolic piece of a conjugate of Thurston's c.
    """

    def test_report(self):
        alpha = Fraction(1, 3)
        report = frat_report(alpha)
        self.assertEqual(report["class"], ConjClass.PARABOLIC)
        self.assertTrue(report["fixes_alpha"])
        self.assertEqual(report["breakpoints"], [alpha, alpha + Fraction(1, 2), alpha + 1, INF])
        self.assertEqual(report["c1_defects"], [])

    def test_report_is_jsonable(self):
        data = codec.jsonable(frat_report(Fraction(1, 3)))
        self.assertEqual(data["class"], "parabolic")
        self.assertEqual(data["piece"], [["2/3", "1/9"], ["-1", "4/3"]])

    def test_main(self):
        result = CliRunner().invoke(main)
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn('"class": "parabolic"', result.output)


if __name__ == "__main__":
    unittest.main()
