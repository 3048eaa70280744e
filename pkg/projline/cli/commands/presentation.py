"""
Module containing presentation command class.
"""
from projline.cli.base import BaseCommand, verdict
from projline.cli.inputs import emit, require_context
from projline.obstruct import check_affine_presentation


class PresentationCommand(BaseCommand):
    # presentation command

    @classmethod
    def main(cls, minpoly: str = None, lo: str = None, hi: str = None):
        cls.setup()
        cls.exit_with(cls.presentation, minpoly, lo, hi)

    @classmethod
    def presentation(cls, minpoly, lo, hi):
        report = check_affine_presentation(require_context(minpoly, lo, hi))
        emit(report)
        return verdict(report.all_hold())
