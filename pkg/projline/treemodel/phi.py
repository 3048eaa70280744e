"""
The continued fraction map Φ from binary sequences to the projective line:

    1 1^a0 0^a1 1^a2 ... ↦ a0 + 1/(a1 + 1/(a2 + ...))
    0 0^a0 1^a1 0^a2 ... ↦ -(a0 + 1/(a1 + 1/(a2 + ...)))

Reading a 1 applies t ↦ t + 1 and reading a 0 applies t ↦ t/(t + 1) to the value of the
tail, so Φ of an eventually periodic sequence is a Möbius image of the attracting fixed
point of the period's matrix.
"""
from fractions import Fraction

from sympy.ntheory.continued_fraction import continued_fraction_periodic

from projline.exceptions.all import TreeModelError
from projline.logging import logger
from projline.moebius import CHART, INF, MoebiusMap, as_point, format_point, identity
from projline.numfield import sign
from projline.treemodel.rules import apply_word, as_tree_word
from projline.treemodel.sequence import EvPerSeq, as_sequence

READ_ONE = MoebiusMap(1, 1, 0, 1)
READ_ZERO = MoebiusMap(1, 0, 1, 1)

_READ = {"1": READ_ONE, "0": READ_ZERO}


def word_matrix(word: str) -> MoebiusMap:
    """M_w = M_{w0} ∘ M_{w1} ∘ ..., the map prepending w to the tail."""
    result = identity()
    for bit in word:
        result = result.compose(_READ[bit])
    return result


def _periodic_value(period: str):
    if set(period) == {"1"}:
        return INF
    if set(period) == {"0"}:
        return Fraction(0)
    # Both letters occur, so the matrix has positive entries: one fixed point on each side of 0.
    for point in word_matrix(period).fixed_points():
        if point is not INF and sign(point) > 0:
            return point
    raise AssertionError(f"No positive fixed point for period {period}.")


def tail_value(seq: EvPerSeq):
    """The continued fraction value of a tail, in [0, ∞]."""
    seq = as_sequence(seq)
    return word_matrix(seq.preperiod).apply(_periodic_value(seq.period))


def phi(seq):
    """
    Example:

    ```py
    phi("11(0)")  # Fraction(1, 1)
    phi("(0)")    # INF
    ```
    """
    seq = as_sequence(seq)
    value = tail_value(seq.drop(1))
    if seq.letter(0) == "1":
        return value
    return CHART.apply(value)


def _tail_from_nonnegative(q: Fraction) -> EvPerSeq:
    terms = [int(a) for a in continued_fraction_periodic(q.numerator, q.denominator)]
    word = "".join(("1" if i % 2 == 0 else "0") * a for i, a in enumerate(terms))
    last_bit = "1" if (len(terms) - 1) % 2 == 0 else "0"
    return EvPerSeq(word, "0" if last_bit == "1" else "1")


def encode_rational(q) -> EvPerSeq:
    """
    A sequence with Φ(sequence) = q, for q rational or ∞.

    Raises:
        TreeModelError: If q is irrational.
    """
    q = as_point(q)
    if q is INF:
        return EvPerSeq.constant("1")
    if not isinstance(q, Fraction):
        raise TreeModelError(f"Only rationals and ∞ have finite binary codes, got {format_point(q)}.")
    if q >= 0:
        return _tail_from_nonnegative(q).prepend("1")
    return _tail_from_nonnegative(-1 / q).prepend("0")


def verify_conjugacy(word, f, samples) -> bool:
    """
    Checks Φ(w(ξ)) = f(Φ(ξ)) exactly on every sample.

    Args:
        word: A tree word, as a string or a list of `TreeGen`.
        f: A `PwProjMap` or `MoebiusMap`.
        samples: Sequences, as `EvPerSeq` or wire strings.
    """
    gens = as_tree_word(word)
    for sample in samples:
        sample = as_sequence(sample)
        lhs = phi(apply_word(gens, sample))
        rhs = f(phi(sample))
        if lhs != rhs:
            logger.log(
                f"Conjugacy fails at {sample}: {format_point(lhs)} != {format_point(rhs)}",
                level=logger.DEBUG,
            )
            return False
    return True
