"""
Module containing commutator command class.
"""
from projline.cli.base import BaseCommand
from projline.cli.inputs import emit, load_context, load_gens
from projline.pwhomeo import has_compact_support


class CommutatorCommand(BaseCommand):
    # commutator command

    @classmethod
    def main(cls, u: str, v: str, **gens_source):
        cls.setup()
        cls.exit_with(cls.commutator, u, v, **gens_source)

    @classmethod
    def commutator(cls, u, v, preset=None, gens_file=None, minpoly=None, lo=None, hi=None):
        k = load_gens(preset, gens_file, load_context(minpoly, lo, hi)).commutator(u, v)
        emit({
            "u": u,
            "v": v,
            "map": k,
            "identity": k.is_identity(),
            "compact_support": has_compact_support(k),
        })
