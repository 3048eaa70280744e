"""
Module containing c1-defects command class.
"""
from projline.cli.base import BaseCommand
from projline.cli.inputs import emit, load_context, load_gens, select_map


class C1DefectsCommand(BaseCommand):
    # c1-defects command

    @classmethod
    def main(cls, **map_source):
        cls.setup()
        cls.exit_with(cls.c1_defects, **map_source)

    @classmethod
    def c1_defects(cls, preset=None, gens_file=None, minpoly=None, lo=None, hi=None, gen=None, word=None):
        f = select_map(load_gens(preset, gens_file, load_context(minpoly, lo, hi)), gen, word)
        emit({
            "breakpoints": f.breakpoints(),
            "defects": [{"point": p, "left": left, "right": right} for p, left, right in f.c1_defect_points()],
        })
