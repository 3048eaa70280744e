"""
Module containing eval command class.
"""
from projline.cli.base import BaseCommand
from projline.cli.inputs import emit, load_context, load_gens, read_matrix, read_point, select_map
from projline.moebius import format_point


class EvalCommand(BaseCommand):
    # eval command

    @classmethod
    def main(cls, points: tuple, matrix: str = None, **map_source):
        cls.setup()
        cls.exit_with(cls.eval, points, matrix, **map_source)

    @classmethod
    def eval(cls, points, matrix, preset=None, gens_file=None, minpoly=None, lo=None, hi=None, gen=None, word=None):
        ctx = load_context(minpoly, lo, hi)
        if matrix:
            f = read_matrix(matrix, ctx)
        else:
            f = select_map(load_gens(preset, gens_file, ctx), gen, word)

        values = []
        for text in points:
            p = read_point(text, ctx)
            value = f(p)
            values.append({"point": p, "value": value, "decimal": format_point(value)})
        emit(values)
