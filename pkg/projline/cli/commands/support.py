"""
Module containing support command class.
"""
from projline.cli.base import BaseCommand
from projline.cli.inputs import emit, load_context, load_gens, select_map
from projline.pwhomeo import has_compact_support, support


class SupportCommand(BaseCommand):
    # support command

    @classmethod
    def main(cls, **map_source):
        cls.setup()
        cls.exit_with(cls.support, **map_source)

    @classmethod
    def support(cls, preset=None, gens_file=None, minpoly=None, lo=None, hi=None, gen=None, word=None):
        f = select_map(load_gens(preset, gens_file, load_context(minpoly, lo, hi)), gen, word)
        emit({"support": support(f), "compact": has_compact_support(f)})
