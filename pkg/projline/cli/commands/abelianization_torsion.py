"""
Module containing abelianization-torsion command class.
"""
from projline.cli.base import BaseCommand
from projline.cli.inputs import emit, parse_json
from projline.numfield import IntPolynomial, abelianization_torsion


class AbelianizationTorsionCommand(BaseCommand):
    # abelianization-torsion command

    @classmethod
    def main(cls, minpoly: str):
        cls.setup()
        cls.exit_with(cls.abelianization_torsion, minpoly)

    @classmethod
    def abelianization_torsion(cls, minpoly):
        p = IntPolynomial(parse_json(minpoly, "--minpoly"))
        emit({"minpoly": list(p.coeffs), "torsion": abelianization_torsion(p)})
