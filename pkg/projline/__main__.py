#!/usr/bin/env python
"""
Main entry to projline command-line tool.
"""
import sys

import click

from projline.art import projline_art_small
from projline.exceptions.all import ProjlineError
from projline.logging import console, logger
from projline.settings import SETTINGS
from projline.version import cli_version

from projline.cli.inputs import context_options, gens_options, map_options
from projline.cli.commands.abelianization_torsion import AbelianizationTorsionCommand
from projline.cli.commands.audit import AuditCommand
from projline.cli.commands.c1_defects import C1DefectsCommand
from projline.cli.commands.c2_defects import C2DefectsCommand
from projline.cli.commands.check_relation import CheckRelationCommand
from projline.cli.commands.classify import ClassifyCommand
from projline.cli.commands.commutator import CommutatorCommand
from projline.cli.commands.compose import ComposeCommand
from projline.cli.commands.eval import EvalCommand
from projline.cli.commands.eval_word import EvalWordCommand
from projline.cli.commands.fixed_points import FixedPointsCommand
from projline.cli.commands.flow_at import FlowAtCommand
from projline.cli.commands.flow_field import FlowFieldCommand
from projline.cli.commands.flow_time import FlowTimeCommand
from projline.cli.commands.galois_hyperbolic import GaloisHyperbolicCommand
from projline.cli.commands.germ import GermCommand
from projline.cli.commands.linked import LinkedCommand
from projline.cli.commands.lm_apply import LmApplyCommand
from projline.cli.commands.lm_phi import LmPhiCommand
from projline.cli.commands.lm_verify import LmVerifyCommand
from projline.cli.commands.nonc2 import NonC2Command
from projline.cli.commands.presentation import PresentationCommand
from projline.cli.commands.preset import PresetCommand
from projline.cli.commands.runtests import RuntestsCommand
from projline.cli.commands.sample import SampleCommand
from projline.cli.commands.suite import SuiteCommand
from projline.cli.commands.support import SupportCommand


EXAMPLES = f"""
Examples:
    projline classify --matrix "[[2,-1],[-1,1]]"
    projline c1-defects --preset thompson_t --gen c
    projline check-relation --preset g_lambda --minpoly "[-2,1]" --word "a.b.a^-1.b^-2"
    projline galois-hyperbolic --minpoly "[1,4,4,4,1]"
    projline lm-phi --seq "1(10)"
    projline flow-time --gen-matrix "[[4,0],[0,1]]" --target-matrix "[[2,0],[0,1]]"
    projline suite paper-core

{console.Fore.YELLOW}JSON and CSV go to standard output, messages to standard error.
Exit codes: 0 success, 1 a checked statement is false, 2 error.{console.Style.RESET_ALL}
"""


@click.group(invoke_without_command=True)
@click.option('-V', '--version', is_flag=True, help="Show the version and exit.")
@click.pass_context
def cli(ctx, version):
    """
    projline CLI - Exact computations with piecewise projective maps of the line.
    """
    if version:
        click.echo(cli_version)
    elif not ctx.invoked_subcommand:
        click.echo(click.style(projline_art_small, fg='cyan', bold=True), err=True)
        click.echo(ctx.get_help(), err=True)
        click.echo(EXAMPLES, err=True)


@cli.command(help="Classify a Möbius map as identity, hyperbolic, parabolic or elliptic")
@click.option("--matrix", required=True, help='Matrix as JSON, e.g. "[[2,-1],[-1,1]]".')
@context_options
def classify(matrix, minpoly, lo, hi):
    ClassifyCommand.main(matrix, minpoly, lo, hi)


@cli.command("fixed-points", help="Fixed points of a Möbius map, or the fixed set of a piecewise map")
@click.option("--matrix", default=None, help="Matrix as JSON; otherwise a map is selected from a generator set.")
@map_options
def fixed_points(matrix, **map_source):
    FixedPointsCommand.main(matrix, **map_source)


@cli.command(help="Compose Möbius maps, the last one acting first")
@click.option("--matrix", "matrices", multiple=True, help="Matrix as JSON, repeatable.")
@context_options
def compose(matrices, minpoly, lo, hi):
    ComposeCommand.main(matrices, minpoly, lo, hi)


@cli.command("eval", help="Evaluate a map at points")
@click.option("--point", "points", multiple=True, required=True, help='Point: "p/q", "inf" or a JSON scalar; repeatable.')
@click.option("--matrix", default=None, help="Matrix as JSON; otherwise a map is selected from a generator set.")
@map_options
def eval_(points, matrix, **map_source):
    EvalCommand.main(points, matrix, **map_source)


@cli.command("c1-defects", help="Breakpoints where the first derivative jumps")
@map_options
def c1_defects(**map_source):
    C1DefectsCommand.main(**map_source)


@cli.command("c2-defects", help="Breakpoints where the first or second derivative jumps")
@map_options
def c2_defects(**map_source):
    C2DefectsCommand.main(**map_source)


@cli.command(help="Support of a map as open arcs")
@map_options
def support(**map_source):
    SupportCommand.main(**map_source)


@cli.command(help="Linked pairs of successive fixed points of two maps")
@click.option("--f", "f", default=None, help="Word for the first map.")
@click.option("--g", "g", default=None, help="Word for the second map.")
@click.option("--pair", default=None, help='Both words, comma separated, e.g. "f,g".')
@gens_options
def linked(f, g, pair, **gens_source):
    LinkedCommand.main(f, g, pair, **gens_source)


@cli.command(help="Sample a map on equally spaced points as CSV")
@click.option("-n", "--n", "n", type=int, default=11, help="Number of samples (default: 11).")
@click.option("--from", "start", default="0", help="First sample point (default: 0).")
@click.option("--to", "stop", default="1", help="Last sample point (default: 1).")
@click.option("--digits", type=int, default=None, help=f"Significant digits (default: {SETTINGS['DIGITS']}).")
@map_options
def sample(n, start, stop, digits, **map_source):
    SampleCommand.main(n, start, stop, digits, **map_source)


@cli.command(help="Audit two maps for linked fixed points and one-sided hyperbolic breakpoints")
@click.option("--f", "f", default=None, help="Word for the first map.")
@click.option("--g", "g", default=None, help="Word for the second map.")
@click.option("--pair", default=None, help='Both words, comma separated, e.g. "f,g".')
@gens_options
def audit(f, g, pair, **gens_source):
    AuditCommand.main(f, g, pair, **gens_source)


@cli.command(help="Affine germ of a map at +∞ or -∞")
@click.option("--side", type=click.Choice(["plus", "minus"]), default="plus", help="Side of ∞ (default: plus).")
@map_options
def germ(side, **map_source):
    GermCommand.main(side, **map_source)


@cli.command(help="Check the presentation of the affine group of λ and its abelianization")
@context_options
def presentation(minpoly, lo, hi):
    PresentationCommand.main(minpoly, lo, hi)


@cli.command(help="Check the hypotheses of the C² obstruction for two maps")
@click.option("--f", "f", required=True, help="Word for the first map.")
@click.option("--g", "g", required=True, help="Word for the second map.")
@click.option("--a", "a", required=True, help="Endpoint of the contraction arc.")
@click.option("--base", default="0", help="Common fixed point, the start of the arc (default: 0).")
@click.option("--bound", type=int, default=None, help="Exponent bound of the multiplicative relation search.")
@gens_options
def nonc2(f, g, a, base, bound, **gens_source):
    NonC2Command.main(f, g, a, base, bound, **gens_source)


@cli.command("galois-hyperbolic", help="Decide whether no root of a polynomial has absolute value 1")
@click.option("--minpoly", required=True, help="Integer polynomial as JSON, constant term first.")
def galois_hyperbolic(minpoly):
    GaloisHyperbolicCommand.main(minpoly)


@cli.command("abelianization-torsion", help="Torsion order of the abelianized affine group of λ")
@click.option("--minpoly", required=True, help="Minimal polynomial as JSON, constant term first.")
def abelianization_torsion(minpoly):
    AbelianizationTorsionCommand.main(minpoly)


@cli.command("lm-apply", help="Apply a tree word to an eventually periodic sequence")
@click.option("--tree", "--word", "tree", required=True, help='Tree word, e.g. "y_101^-1.x_10".')
@click.option("--seq", required=True, help='Sequence, e.g. "10(01)".')
def lm_apply(tree, seq):
    LmApplyCommand.main(tree, seq)


@cli.command("lm-phi", help="Continued fraction value of eventually periodic sequences")
@click.option("--seq", "seqs", multiple=True, required=True, help="Sequence, repeatable.")
@click.option("--digits", type=int, default=None, help="Significant digits of the decimal value.")
def lm_phi(seqs, digits):
    LmPhiCommand.main(seqs, digits)


@cli.command("lm-verify", help="Check that a tree word is conjugate to a map on random sequences")
@click.option("--tree", "--word", "tree", required=True, help="Tree word.")
@click.option("--samples", type=int, default=100, help="Number of random sequences (default: 100).")
@click.option("--seed", type=int, default=None, help="Random seed (default: the DEFAULT_SEED setting).")
@click.option("--matrix", default=None, help="Matrix as JSON; otherwise a map is selected from a generator set.")
@click.option("--matrix-file", type=click.Path(exists=True, dir_okay=False), default=None, help="JSON file holding the matrix.")
@click.option("--gen", default=None, help="Generator name of the target map.")
@click.option("--target-word", default=None, help="Word for the target map.")
@gens_options
def lm_verify(tree, samples, seed, matrix, matrix_file, **map_source):
    LmVerifyCommand.main(tree, samples, seed, matrix, matrix_file, **map_source)


@cli.command("flow-field", help="Vector field of the flow through a Möbius map")
@click.option("--matrix", required=True, help="Hyperbolic or parabolic matrix as JSON.")
@context_options
def flow_field(matrix, minpoly, lo, hi):
    FlowFieldCommand.main(matrix, minpoly, lo, hi)


@cli.command("flow-at", help="Time-s map of the flow through a Möbius map")
@click.option("--matrix", required=True, help="Hyperbolic or parabolic matrix as JSON.")
@click.option("--s", "s", type=float, required=True, help="Flow time.")
@context_options
def flow_at(matrix, s, minpoly, lo, hi):
    FlowAtCommand.main(matrix, s, minpoly, lo, hi)


@cli.command("flow-time", help="Time at which a map lies on the flow through another")
@click.option("--gen-matrix", required=True, help="Matrix whose flow is used.")
@click.option("--target-matrix", required=True, help="Matrix to locate on the flow.")
@click.option("--tol", type=float, default=None, help=f"Tolerance (default: {SETTINGS['FLOW_TOLERANCE']}).")
@context_options
def flow_time(gen_matrix, target_matrix, tol, minpoly, lo, hi):
    FlowTimeCommand.main(gen_matrix, target_matrix, tol, minpoly, lo, hi)


@cli.command(help="Show a preset generator set as JSON")
@click.argument("name")
@context_options
def preset(name, minpoly, lo, hi):
    PresetCommand.main(name, minpoly, lo, hi)


@cli.command("eval-word", help="Evaluate a word in a generator set")
@click.option("--word", required=True, help="Word in the generators.")
@gens_options
def eval_word(word, **gens_source):
    EvalWordCommand.main(word, **gens_source)


@cli.command("check-relation", help="Check that a word evaluates to the identity")
@click.option("--word", required=True, help="Word in the generators.")
@gens_options
def check_relation(word, **gens_source):
    CheckRelationCommand.main(word, **gens_source)


@cli.command(help="Commutator [u, v] = u v u⁻¹ v⁻¹ of two words")
@click.option("--u", "u", required=True, help="First word.")
@click.option("--v", "v", required=True, help="Second word.")
@gens_options
def commutator(u, v, **gens_source):
    CommutatorCommand.main(u, v, **gens_source)


@cli.command(help="Run a named verification suite: paper-core, lodha-moore or flows")
@click.argument("name")
@click.option("--workers", type=int, default=None, help=f"Worker threads (default: {SETTINGS['WORKERS']}).")
def suite(name, workers):
    SuiteCommand.main(name, workers)


@cli.command(help="Run the bundled tests using unittest module")
def runtests():
    RuntestsCommand.main()


def run(argv: list = None) -> int:
    """
    Runs the command line with `argv` and returns the exit code instead of exiting.
    """
    try:
        result = cli.main(args=argv, prog_name="projline", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        return 1
    except SystemExit as e:
        if e.code is None:
            return 0
        return e.code if isinstance(e.code, int) else 2
    except ProjlineError as e:
        console.log(f"Error: {e}", level=console.ERROR)
        return 2
    except Exception as e:
        logger.log_exception(e)
        return 2
    return result if isinstance(result, int) else 0


if __name__ == "__main__":
    cli()
