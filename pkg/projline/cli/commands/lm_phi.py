"""
Module containing lm-phi command class.
"""
from projline.cli.base import BaseCommand
from projline.cli.inputs import emit
from projline.moebius import format_point
from projline.treemodel import as_sequence, phi


class LmPhiCommand(BaseCommand):
    # lm-phi command

    @classmethod
    def main(cls, seqs: tuple, digits: int = None):
        cls.setup()
        cls.exit_with(cls.lm_phi, seqs, digits)

    @classmethod
    def lm_phi(cls, seqs, digits):
        values = []
        for text in seqs:
            seq = as_sequence(text)
            value = phi(seq)
            values.append({"sequence": seq, "value": value, "decimal": format_point(value, digits)})
        emit(values)
