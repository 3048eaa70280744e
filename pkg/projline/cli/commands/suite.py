"""
Module containing suite command class.
"""
from projline.cli.base import BaseCommand, verdict
from projline.cli.inputs import emit
from projline.suites import run_suite


class SuiteCommand(BaseCommand):
    # suite command

    @classmethod
    def main(cls, name: str, workers: int = None):
        cls.setup()
        cls.exit_with(cls.suite, name, workers)

    @classmethod
    def suite(cls, name, workers):
        report = run_suite(name, workers)
        emit(report)
        return verdict(report.all_passed())
