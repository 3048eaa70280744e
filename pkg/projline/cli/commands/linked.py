"""
Module containing linked command class.
"""
from projline.cli.base import BaseCommand
from projline.cli.inputs import emit, load_context, load_gens, read_pair
from projline.pwhomeo import linked_pairs


class LinkedCommand(BaseCommand):
    # linked command

    @classmethod
    def main(cls, f: str, g: str, pair: str, **gens_source):
        cls.setup()
        cls.exit_with(cls.linked, f, g, pair, **gens_source)

    @classmethod
    def linked(cls, f, g, pair, preset=None, gens_file=None, minpoly=None, lo=None, hi=None):
        f, g = read_pair(f, g, pair)
        gens = load_gens(preset, gens_file, load_context(minpoly, lo, hi))
        emit({"f": f, "g": g, "linked": linked_pairs(gens.eval_word(f), gens.eval_word(g))})
