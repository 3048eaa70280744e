"""
Module containing audit command class.
"""
from projline.cli.base import BaseCommand
from projline.cli.inputs import emit, load_context, load_gens, read_pair
from projline.obstruct import audit_pair


class AuditCommand(BaseCommand):
    # audit command

    @classmethod
    def main(cls, f: str, g: str, pair: str, **gens_source):
        cls.setup()
        cls.exit_with(cls.audit, f, g, pair, **gens_source)

    @classmethod
    def audit(cls, f, g, pair, preset=None, gens_file=None, minpoly=None, lo=None, hi=None):
        f, g = read_pair(f, g, pair)
        gens = load_gens(preset, gens_file, load_context(minpoly, lo, hi))
        emit(audit_pair(f, gens.eval_word(f), g, gens.eval_word(g)))
