"""
Reading command line inputs: number field contexts, generator sets, maps, matrices and
points, plus the click options shared by the map commands.
"""
import json

from fractions import Fraction

import click

from projline.catalog import GenSet, get_preset
from projline.exceptions.all import CatalogError, ScalarParseError
from projline.moebius import MoebiusMap
from projline.numfield import IntPolynomial, NumberFieldContext
from projline.pwhomeo import PwProjMap
from projline.utils import codec


def parse_json(text: str, what: str):
    """
    Raises:
        ScalarParseError: If text is not JSON.
    """
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ScalarParseError(f"{what} is not valid JSON: {text!r}.") from e


def load_context(minpoly: str = None, lo: str = None, hi: str = None) -> NumberFieldContext:
    """
    Context from `--minpoly` (JSON coefficient list, constant term first) and the
    isolating interval `--lo`, `--hi`. A linear polynomial needs no interval.

    Returns None when no polynomial is given.

    Raises:
        ScalarParseError: If the interval is missing for degree two or more.
    """
    if minpoly is None:
        return None
    coeffs = parse_json(minpoly, "--minpoly")
    poly = IntPolynomial(coeffs)
    if lo is None or hi is None:
        if poly.degree != 1:
            raise ScalarParseError(f"--lo and --hi are required to pick a root of {poly}.")
        return NumberFieldContext.rational(Fraction(-poly.coeffs[0], poly.coeffs[1]))
    try:
        return NumberFieldContext(coeffs, Fraction(lo), Fraction(hi))
    except (ValueError, ZeroDivisionError) as e:
        raise ScalarParseError(f"Bad isolating interval ({lo}, {hi}).") from e


def require_context(minpoly: str = None, lo: str = None, hi: str = None) -> NumberFieldContext:
    """
    Raises:
        ScalarParseError: If --minpoly is missing.
    """
    if minpoly is None:
        raise ScalarParseError("--minpoly is required.")
    return load_context(minpoly, lo, hi)


def load_gens(preset: str = None, gens_file: str = None, ctx: NumberFieldContext = None) -> GenSet:
    """
    Raises:
        CatalogError: If neither a preset nor a generator file is given.
    """
    if gens_file:
        return GenSet.from_json(codec.load_file(gens_file))
    if preset:
        return get_preset(preset, ctx)
    raise CatalogError("Give a generator set with --preset or --gens.")


def select_map(gens: GenSet, gen: str = None, word: str = None) -> PwProjMap:
    """
    Raises:
        CatalogError: If neither a generator nor a word is given.
    """
    if word:
        return gens.eval_word(word)
    if gen:
        return gens[gen]
    raise CatalogError("Select a map with --gen or --word.")


def read_matrix(text: str, ctx: NumberFieldContext = None) -> MoebiusMap:
    """A JSON [[a, b], [c, d]] with integer or "p/q" entries."""
    return codec.decode_matrix(parse_json(text, "matrix"), ctx)


def read_matrix_file(path: str, ctx: NumberFieldContext = None) -> MoebiusMap:
    """A JSON file holding one matrix, as for `read_matrix`."""
    return codec.decode_matrix(codec.load_file(path), ctx)


def read_pair(f: str = None, g: str = None, pair: str = None) -> tuple:
    """
    Two words, from --f and --g or from a comma separated --pair.

    Raises:
        CatalogError: If the pair is malformed or no words are given.
    """
    if pair:
        words = [w.strip() for w in pair.split(",")]
        if len(words) != 2 or not all(words):
            raise CatalogError(f"--pair expects two comma separated words, got {pair!r}.")
        return tuple(words)
    if f and g:
        return f, g
    raise CatalogError("Give two words with --f and --g, or --pair.")


def read_point(text: str, ctx: NumberFieldContext = None):
    """"inf", "p/q", or a JSON scalar encoding."""
    text = text.strip()
    if text.startswith("{"):
        return codec.decode_point(parse_json(text, "point"), ctx)
    return codec.decode_point(text, ctx)


def emit(obj):
    """Writes obj to standard output as JSON."""
    click.echo(codec.dumps(obj))


def context_options(func):
    """--minpoly, --lo and --hi."""
    func = click.option("--hi", default=None, help="Upper end of the isolating interval of λ.")(func)
    func = click.option("--lo", default=None, help="Lower end of the isolating interval of λ.")(func)
    func = click.option(
        "--minpoly",
        default=None,
        help='Minimal polynomial of λ as a JSON list, constant term first, e.g. "[-2,0,1]".',
    )(func)
    return func


def gens_options(func):
    """--preset and --gens, together with the context options."""
    func = context_options(func)
    func = click.option("--gens", "gens_file", default=None, help="JSON file with a generator set.")(func)
    func = click.option("--preset", default=None, help="Named generator set, e.g. thompson_t or g_lambda.")(func)
    return func


def map_options(func):
    """Generator set options plus --gen and --word."""
    func = click.option("--word", default=None, help='Word in the generators, e.g. "a.b^-1".')(func)
    func = click.option("--gen", default=None, help="Generator name.")(func)
    return gens_options(func)
