"""
Module containing eval-word command class.
"""
from projline.cli.base import BaseCommand
from projline.cli.inputs import emit, load_context, load_gens


class EvalWordCommand(BaseCommand):
    # eval-word command

    @classmethod
    def main(cls, word: str, **gens_source):
        cls.setup()
        cls.exit_with(cls.eval_word, word, **gens_source)

    @classmethod
    def eval_word(cls, word, preset=None, gens_file=None, minpoly=None, lo=None, hi=None):
        f = load_gens(preset, gens_file, load_context(minpoly, lo, hi)).eval_word(word)
        emit({"word": word, "map": f, "identity": f.is_identity()})
