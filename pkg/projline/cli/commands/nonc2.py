"""
Module containing nonc2 command class.
"""
from projline.cli.base import BaseCommand, verdict
from projline.cli.inputs import emit, load_context, load_gens, read_point
from projline.obstruct import check_nonc2_hypotheses


class NonC2Command(BaseCommand):
    # nonc2 command

    @classmethod
    def main(cls, f: str, g: str, a: str, base: str = "0", bound: int = None, **gens_source):
        cls.setup()
        cls.exit_with(cls.nonc2, f, g, a, base, bound, **gens_source)

    @classmethod
    def nonc2(cls, f, g, a, base, bound, preset=None, gens_file=None, minpoly=None, lo=None, hi=None):
        ctx = load_context(minpoly, lo, hi)
        gens = load_gens(preset, gens_file, ctx)
        report = check_nonc2_hypotheses(
            gens.eval_word(f),
            gens.eval_word(g),
            read_point(a, ctx),
            base=read_point(base, ctx),
            bound=bound,
        )
        emit(report)
        return verdict(report.holds())
