"""
Module containing fixed-points command class.
"""
from projline.cli.base import BaseCommand
from projline.cli.inputs import emit, load_context, load_gens, read_matrix, select_map
from projline.pwhomeo import fixed_set


class FixedPointsCommand(BaseCommand):
    # fixed-points command

    @classmethod
    def main(cls, matrix: str = None, **map_source):
        cls.setup()
        cls.exit_with(cls.fixed_points, matrix, **map_source)

    @classmethod
    def fixed_points(cls, matrix, preset=None, gens_file=None, minpoly=None, lo=None, hi=None, gen=None, word=None):
        ctx = load_context(minpoly, lo, hi)
        if matrix:
            m = read_matrix(matrix, ctx)
            emit({"matrix": m, "class": m.classify(), "fixed_points": m.fixed_points()})
            return
        f = select_map(load_gens(preset, gens_file, ctx), gen, word)
        emit({"fixed_set": fixed_set(f)})
