"""
Test cases for the verification suites and their runner.
"""
import unittest

from projline.exceptions.all import ProjlineError, UnknownSuiteError
from projline.suites import SUITES, get_suite, run_checks, run_suite


def failing_check() -> bool:
    raise ProjlineError("broken")


class TestRunner(unittest.TestCase):
    """
    Ordering, failure capture and the pass/fail table.
    """

    def test_results_keep_order(self):
        checks = [(f"check-{i}", lambda i=i: i % 2 == 0) for i in range(8)]
        report = run_checks("numbers", checks, workers=3)
        self.assertEqual([r.name for r in report.results], [name for name, _ in checks])
        self.assertEqual([r.passed for r in report.results], [i % 2 == 0 for i in range(8)])
        self.assertFalse(report.all_passed())
        self.assertEqual(len(report.failures()), 4)

    def test_exceptions_are_failures(self):
        report = run_checks("broken", [("raises", failing_check), ("holds", lambda: True)])
        raised, held = report.results
        self.assertFalse(raised.passed)
        self.assertEqual(raised.detail, "ProjlineError: broken")
        self.assertTrue(held.passed)

    def test_table(self):
        report = run_checks("small", [("one", lambda: True), ("two", lambda: False)])
        table = report.table()
        self.assertIn("one", table)
        self.assertIn("FAIL", table)
        self.assertTrue(table.endswith("1/2 passed"))
        data = report.to_json()
        self.assertEqual(data["suite"], "small")
        self.assertFalse(data["passed"])

    def test_unknown_suite(self):
        with self.assertRaises(UnknownSuiteError):
            get_suite("everything")
        with self.assertRaises(UnknownSuiteError):
            run_suite("everything", show_table=False)


class TestSuites(unittest.TestCase):
    """
    Every named suite passes.
    """

    def test_names(self):
        self.assertEqual(set(SUITES), {"paper-core", "lodha-moore", "flows"})

    def test_core_suite(self):
        report = run_suite("paper-core", show_table=False)
        self.assertTrue(report.all_passed(), report.failures())

    def test_lodha_moore(self):
        report = run_suite("lodha-moore", show_table=False)
        self.assertTrue(report.all_passed(), report.failures())

    def test_flows(self):
        report = run_suite("flows", show_table=False)
        self.assertTrue(report.all_passed(), report.failures())


if __name__ == "__main__":
    unittest.main()
