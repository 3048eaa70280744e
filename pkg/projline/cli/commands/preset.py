"""
Module containing preset command class.
"""
from projline.cli.base import BaseCommand
from projline.cli.inputs import emit, load_context
from projline.catalog import get_preset


class PresetCommand(BaseCommand):
    # preset command

    @classmethod
    def main(cls, name: str, minpoly: str = None, lo: str = None, hi: str = None):
        cls.setup()
        cls.exit_with(cls.preset, name, minpoly, lo, hi)

    @classmethod
    def preset(cls, name, minpoly, lo, hi):
        emit(get_preset(name, load_context(minpoly, lo, hi)))
