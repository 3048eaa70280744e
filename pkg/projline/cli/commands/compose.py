"""
Module containing compose command class.
"""
from projline.cli.base import BaseCommand
from projline.cli.inputs import emit, load_context, read_matrix
from projline.exceptions.all import MoebiusError
from projline.moebius import identity


class ComposeCommand(BaseCommand):
    # compose command

    @classmethod
    def main(cls, matrices: tuple, minpoly: str = None, lo: str = None, hi: str = None):
        cls.setup()
        cls.exit_with(cls.compose, matrices, minpoly, lo, hi)

    @classmethod
    def compose(cls, matrices, minpoly, lo, hi):
        if not matrices:
            raise MoebiusError("Give at least one --matrix.")
        ctx = load_context(minpoly, lo, hi)
        product = identity()
        # The last matrix acts first.
        for text in matrices:
            product = product.compose(read_matrix(text, ctx))
        emit({"matrix": product, "class": product.classify()})
