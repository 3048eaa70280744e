"""
Module containing flow-field command class.
"""
from projline.cli.base import BaseCommand
from projline.cli.inputs import emit, load_context, read_matrix
from projline.flow import generator_of, vector_field


class FlowFieldCommand(BaseCommand):
    # flow-field command

    @classmethod
    def main(cls, matrix: str, minpoly: str = None, lo: str = None, hi: str = None):
        cls.setup()
        cls.exit_with(cls.flow_field, matrix, minpoly, lo, hi)

    @classmethod
    def flow_field(cls, matrix, minpoly, lo, hi):
        generator = generator_of(read_matrix(matrix, load_context(minpoly, lo, hi)))
        field = vector_field(generator)
        emit({"generator": generator, "field": field, "zeros": field.zeros()})
