"""
Module containing flow-at command class.
"""
from projline.cli.base import BaseCommand
from projline.cli.inputs import emit, load_context, read_matrix
from projline.flow import flow_at, generator_of


class FlowAtCommand(BaseCommand):
    # flow-at command

    @classmethod
    def main(cls, matrix: str, s: float, minpoly: str = None, lo: str = None, hi: str = None):
        cls.setup()
        cls.exit_with(cls.flow_at, matrix, s, minpoly, lo, hi)

    @classmethod
    def flow_at(cls, matrix, s, minpoly, lo, hi):
        generator = generator_of(read_matrix(matrix, load_context(minpoly, lo, hi)))
        emit({"s": s, "matrix": flow_at(generator, s)})
