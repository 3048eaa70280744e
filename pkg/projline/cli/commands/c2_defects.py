"""
Module containing c2-defects command class.
"""
from projline.cli.base import BaseCommand
from projline.cli.inputs import emit, load_context, load_gens, select_map


class C2DefectsCommand(BaseCommand):
    # c2-defects command

    @classmethod
    def main(cls, **map_source):
        cls.setup()
        cls.exit_with(cls.c2_defects, **map_source)

    @classmethod
    def c2_defects(cls, preset=None, gens_file=None, minpoly=None, lo=None, hi=None, gen=None, word=None):
        f = select_map(load_gens(preset, gens_file, load_context(minpoly, lo, hi)), gen, word)
        defects = []
        for p, (left1, left2), (right1, right2) in f.c2_defect_points():
            defects.append({
                "point": p,
                "left": {"first": left1, "second": left2},
                "right": {"first": right1, "second": right2},
            })
        emit({"breakpoints": f.breakpoints(), "defects": defects})
