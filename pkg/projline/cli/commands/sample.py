"""
Module containing sample command class.
"""
import click

from projline.cli.base import BaseCommand
from projline.cli.inputs import load_context, load_gens, read_point, select_map
from projline.pwhomeo import sample


class SampleCommand(BaseCommand):
    # sample command

    @classmethod
    def main(cls, n: int, start: str, stop: str, digits: int = None, **map_source):
        cls.setup()
        cls.exit_with(cls.sample, n, start, stop, digits, **map_source)

    @classmethod
    def sample(cls, n, start, stop, digits, preset=None, gens_file=None, minpoly=None, lo=None, hi=None, gen=None, word=None):
        ctx = load_context(minpoly, lo, hi)
        f = select_map(load_gens(preset, gens_file, ctx), gen, word)
        click.echo(sample(f, n, read_point(start, ctx), read_point(stop, ctx), digits), nl=False)
