"""
Module containing classify command class.
"""
from projline.cli.base import BaseCommand
from projline.cli.inputs import emit, load_context, read_matrix


class ClassifyCommand(BaseCommand):
    # classify command

    @classmethod
    def main(cls, matrix: str, minpoly: str = None, lo: str = None, hi: str = None):
        cls.setup()
        cls.exit_with(cls.classify, matrix, minpoly, lo, hi)

    @classmethod
    def classify(cls, matrix, minpoly, lo, hi):
        m = read_matrix(matrix, load_context(minpoly, lo, hi))
        emit({
            "matrix": m,
            "class": m.classify(),
            "trace_invariant": m.trace_invariant(),
        })
