"""
Runs named bundles of verification checks on a worker pool and tabulates the results.

A check is a callable taking no arguments and returning a bool. Exceptions raised by a
check count as failures and are recorded in its detail.
"""
import time

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, NamedTuple

from projline.exceptions.all import UnknownSuiteError
from projline.logging import console, logger
from projline.settings import SETTINGS
from projline.suites.registry import SUITES


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str
    seconds: float


class SuiteReport(NamedTuple):
    suite: str
    results: list

    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list:
        return [r for r in self.results if not r.passed]

    def table(self) -> str:
        """Pass/fail table, one row per check."""
        width = max([len(r.name) for r in self.results] + [5])
        lines = [f"{'check'.ljust(width)}  result  seconds", "-" * (width + 17)]
        for r in self.results:
            verdict = "pass" if r.passed else "FAIL"
            lines.append(f"{r.name.ljust(width)}  {verdict.ljust(6)}  {r.seconds:7.3f}")
        lines.append(f"{len(self.results) - len(self.failures())}/{len(self.results)} passed")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.all_passed(),
            "checks": [
                {"name": r.name, "passed": r.passed, "detail": r.detail, "seconds": round(r.seconds, 6)}
                for r in self.results
            ],
        }


def run_check(name: str, check: Callable[[], bool]) -> CheckResult:
    started = time.perf_counter()
    try:
        passed, detail = bool(check()), ""
    except Exception as e:
        passed, detail = False, f"{type(e).__name__}: {e}"
    elapsed = time.perf_counter() - started

    if not passed:
        logger.log(f"Check {name} failed {detail}".rstrip(), level=logger.WARNING)
    return CheckResult(name, passed, detail, elapsed)


def run_checks(suite: str, checks: list, workers: int = None) -> SuiteReport:
    """
    Runs (name, check) pairs concurrently, keeping the order of `checks` in the report.
    """
    workers = workers or SETTINGS["WORKERS"]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        results = list(executor.map(lambda item: run_check(*item), checks))
    return SuiteReport(suite, results)


def get_suite(name: str) -> list:
    """
    Raises:
        UnknownSuiteError: For a name outside `SUITES`.
    """
    try:
        factory = SUITES[name]
    except KeyError:
        raise UnknownSuiteError(f"Unknown suite {name!r}, choose from {', '.join(SUITES)}.") from None
    return factory()


def run_suite(name: str, workers: int = None, show_table: bool = True) -> SuiteReport:
    """
    Runs a named suite and prints its table to standard error.

    Args:
        name (str): One of paper-core, lodha-moore, flows.
        workers (int): Worker threads, defaults to the `WORKERS` setting.
        show_table (bool): Whether to print the pass/fail table.

    Raises:
        UnknownSuiteError: For an unknown suite name.
    """
    report = run_checks(name, get_suite(name), workers)
    if show_table:
        console.log_raw(report.table(), level=console.INFO if report.all_passed() else console.ERROR)
    return report
