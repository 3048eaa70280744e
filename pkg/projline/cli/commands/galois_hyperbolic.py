"""
Module containing galois-hyperbolic command class.
"""
from projline.cli.base import BaseCommand, verdict
from projline.cli.inputs import emit, parse_json
from projline.numfield import IntPolynomial, is_galois_hyperbolic


class GaloisHyperbolicCommand(BaseCommand):
    # galois-hyperbolic command

    @classmethod
    def main(cls, minpoly: str):
        cls.setup()
        cls.exit_with(cls.galois_hyperbolic, minpoly)

    @classmethod
    def galois_hyperbolic(cls, minpoly):
        p = IntPolynomial(parse_json(minpoly, "--minpoly"))
        holds = is_galois_hyperbolic(p)
        emit({"minpoly": list(p.coeffs), "galois_hyperbolic": holds})
        return verdict(holds)
