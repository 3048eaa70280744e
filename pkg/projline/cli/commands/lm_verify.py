"""
Module containing lm-verify command class.
"""
import random

from projline.cli.base import BaseCommand, verdict
from projline.cli.inputs import emit, load_context, load_gens, read_matrix, read_matrix_file, select_map
from projline.settings import SETTINGS
from projline.treemodel import random_seq, verify_conjugacy


class LmVerifyCommand(BaseCommand):
    # lm-verify command

    @classmethod
    def main(cls, tree: str, samples: int, seed: int = None, matrix: str = None, matrix_file: str = None, **map_source):
        cls.setup()
        cls.exit_with(cls.lm_verify, tree, samples, seed, matrix, matrix_file, **map_source)

    @classmethod
    def lm_verify(
        cls,
        tree,
        samples,
        seed,
        matrix,
        matrix_file,
        preset=None,
        gens_file=None,
        minpoly=None,
        lo=None,
        hi=None,
        gen=None,
        target_word=None,
    ):
        ctx = load_context(minpoly, lo, hi)
        if matrix:
            target = read_matrix(matrix, ctx)
        elif matrix_file:
            target = read_matrix_file(matrix_file, ctx)
        else:
            target = select_map(load_gens(preset, gens_file, ctx), gen, target_word)

        seed = SETTINGS["DEFAULT_SEED"] if seed is None else seed
        rng = random.Random(seed)
        holds = verify_conjugacy(tree, target, [random_seq(rng) for _ in range(samples)])
        emit({"word": tree, "samples": samples, "seed": seed, "holds": holds})
        return verdict(holds)
