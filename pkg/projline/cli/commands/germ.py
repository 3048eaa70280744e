"""
Module containing germ command class.
"""
from projline.cli.base import BaseCommand
from projline.cli.inputs import emit, load_context, load_gens, select_map
from projline.obstruct import in_rho_kernel, rho


class GermCommand(BaseCommand):
    # germ command

    @classmethod
    def main(cls, side: str, **map_source):
        cls.setup()
        cls.exit_with(cls.germ, side, **map_source)

    @classmethod
    def germ(cls, side, preset=None, gens_file=None, minpoly=None, lo=None, hi=None, gen=None, word=None):
        f = select_map(load_gens(preset, gens_file, load_context(minpoly, lo, hi)), gen, word)
        emit({"side": side, "germ": rho(f, side), "in_kernel": in_rho_kernel(f, side)})
