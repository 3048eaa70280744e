#!/usr/bin/env python
"""
Worked example: conjugating Thurston's c by a translation t ↦ t + α produces a
parabolic piece fixing α.

Run with `python -m projline.examples.frat_parabolic`.
"""
import click

from fractions import Fraction

from projline.moebius import ConjClass
from projline.numfield import NumberFieldContext
from projline.obstruct import frat_conjugate, frat_parabolic_piece
from projline.utils import codec


def frat_report(alpha) -> dict:
    """
    Summary of T_α c T_α⁻¹ for one translation length.
    """
    piece = frat_parabolic_piece(alpha)
    conjugate = frat_conjugate(alpha)
    return {
        "alpha": alpha,
        "piece": piece,
        "class": piece.classify(),
        "fixes_alpha": piece(alpha) == alpha,
        "breakpoints": conjugate.breakpoints(),
        "c1_defects": conjugate.c1_defect_points(),
    }


@click.command(help="Print the parabolic piece for α = 1/3 and α = √2 - 1")
def main():
    sqrt2 = NumberFieldContext([-2, 0, 1], 1, 2)
    for alpha in (Fraction(1, 3), sqrt2.gen - 1):
        report = frat_report(alpha)
        assert report["class"] == ConjClass.PARABOLIC
        click.echo(codec.dumps(report))


if __name__ == "__main__":
    main()
