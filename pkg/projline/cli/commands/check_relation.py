"""
Module containing check-relation command class.
"""
from projline.cli.base import BaseCommand, verdict
from projline.cli.inputs import emit, load_context, load_gens


class CheckRelationCommand(BaseCommand):
    # check-relation command

    @classmethod
    def main(cls, word: str, **gens_source):
        cls.setup()
        cls.exit_with(cls.check_relation, word, **gens_source)

    @classmethod
    def check_relation(cls, word, preset=None, gens_file=None, minpoly=None, lo=None, hi=None):
        holds = load_gens(preset, gens_file, load_context(minpoly, lo, hi)).check_relation(word)
        emit({"relation": word, "holds": holds})
        return verdict(holds)
