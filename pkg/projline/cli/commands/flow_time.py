"""
Module containing flow-time command class.
"""
from projline.cli.base import BaseCommand
from projline.cli.inputs import emit, load_context, read_matrix
from projline.flow import generator_of, time_of


class FlowTimeCommand(BaseCommand):
    # flow-time command

    @classmethod
    def main(cls, gen_matrix: str, target_matrix: str, tol: float = None, minpoly=None, lo=None, hi=None):
        cls.setup()
        cls.exit_with(cls.flow_time, gen_matrix, target_matrix, tol, minpoly, lo, hi)

    @classmethod
    def flow_time(cls, gen_matrix, target_matrix, tol, minpoly, lo, hi):
        ctx = load_context(minpoly, lo, hi)
        generator = generator_of(read_matrix(gen_matrix, ctx))
        emit({"s": time_of(generator, read_matrix(target_matrix, ctx), tol)})
