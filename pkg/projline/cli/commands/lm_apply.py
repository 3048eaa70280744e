"""
Module containing lm-apply command class.
"""
from projline.cli.base import BaseCommand
from projline.cli.inputs import emit
from projline.treemodel import apply_word, as_sequence


class LmApplyCommand(BaseCommand):
    # lm-apply command

    @classmethod
    def main(cls, tree: str, seq: str):
        cls.setup()
        cls.exit_with(cls.lm_apply, tree, seq)

    @classmethod
    def lm_apply(cls, tree, seq):
        source = as_sequence(seq)
        emit({"word": tree, "input": source, "output": apply_word(tree, source)})
