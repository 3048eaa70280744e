"""
Hypotheses of the C² smoothing obstruction for a pair f, g near a common fixed point:

1. on the arc [base, a], f and g are single Möbius maps (hence C²) contracting
   towards base;
2. f and g commute on [base, a];
3. the germs of f and g at base generate a free abelian group of rank 2.

The third condition is decided for two kinds of germs. Hyperbolic germs are compared
through their multipliers, with an exact answer for rational multipliers and a
bounded search for the others. Parabolic germs are compared through the ratio of
their translation lengths.
"""
from fractions import Fraction
from typing import NamedTuple

import sympy

from projline.exceptions.all import ObstructError
from projline.logging import logger
from projline.moebius import INF, ConjClass, MoebiusMap, arc_position, as_point, format_point, in_open_arc
from projline.numfield import is_rational
from projline.numfield.scalar import as_scalar
from projline.pwhomeo import Arc, PwProjMap, restrict_agrees
from projline.settings import SETTINGS

RANK_TWO = "rank-2"
RANK_TWO_UP_TO_BOUND = "rank-2-up-to-bound"
DEPENDENT = "dependent"
INDETERMINATE = "indeterminate"


class NonC2Report(NamedTuple):
    arc: Arc
    contractions: bool
    commute: bool
    rank: str
    bound: object
    notes: list

    def holds(self) -> bool:
        return self.contractions and self.commute and self.rank in (RANK_TWO, RANK_TWO_UP_TO_BOUND)

    def to_json(self) -> dict:
        return {
            "arc": self.arc,
            "contractions": self.contractions,
            "commute": self.commute,
            "rank": self.rank,
            "bound": self.bound,
            "holds": self.holds(),
            "notes": self.notes,
        }


def _single_piece(f: PwProjMap, base, a):
    """The Möbius map of f on [base, a], or None when a breakpoint lies inside."""
    if any(in_open_arc(b, base, a) for b in f.breakpoints()):
        return None
    return f.piece_map_at(base)


def _is_contraction(m: MoebiusMap, base, a) -> bool:
    if m is None or m.is_identity() or m.apply(base) != base:
        return False
    for p in m.fixed_points():
        if p == a or in_open_arc(p, base, a):
            return False
    return arc_position(m.apply(a), base) < arc_position(a, base)


def _germ_at_infinity(m: MoebiusMap, base) -> tuple:
    """(slope, intercept) of m conjugated so that base goes to ∞."""
    if base is not INF:
        to_infinity = MoebiusMap(0, -1, 1, -base)
        m = m.conjugate(to_infinity)
    return as_scalar(m.a / m.d), as_scalar(m.b / m.d)


def _exponent_vector(q: Fraction) -> dict:
    vector = dict(sympy.factorint(q.numerator))
    for prime, k in sympy.factorint(q.denominator).items():
        vector[prime] = vector.get(prime, 0) - k
    return vector


def rational_multipliers_independent(s: Fraction, t: Fraction) -> bool:
    """True iff no (m, n) ≠ (0, 0) has s^m t^n = 1, for positive rationals s, t."""
    u, v = _exponent_vector(s), _exponent_vector(t)
    primes = sorted(set(u) | set(v))
    if not primes:
        return False
    matrix = sympy.Matrix([[u.get(p, 0) for p in primes], [v.get(p, 0) for p in primes]])
    return matrix.rank() == 2


def multiplicative_relation(s, t, bound: int):
    """Some (m, n) ≠ (0, 0) with |m|, |n| ≤ bound and s^m t^n = 1, or None."""
    powers = {}
    value = Fraction(1)
    inverse = 1 / t
    for n in range(bound + 1):
        powers.setdefault(value, -n)
        value = as_scalar(value * t)
    value = Fraction(1)
    for n in range(bound + 1):
        powers.setdefault(value, n)
        value = as_scalar(value * inverse)

    value = Fraction(1)
    for m in range(bound + 1):
        if m and value in powers:
            return m, powers[value]
        value = as_scalar(value * s)
    return None


def germ_rank(f_germ: MoebiusMap, g_germ: MoebiusMap, base, bound: int = None) -> tuple:
    """
    Decides whether two germs at base generate a free abelian group of rank 2.

    Returns:
        tuple: (verdict, bound used or None, note).
    """
    bound = SETTINGS["UNIT_SEARCH_BOUND"] if bound is None else bound
    if f_germ.is_identity() or g_germ.is_identity():
        return DEPENDENT, None, "A germ is trivial."

    kinds = {f_germ.classify(), g_germ.classify()}
    (sf, tf), (sg, tg) = _germ_at_infinity(f_germ, base), _germ_at_infinity(g_germ, base)

    if kinds == {ConjClass.PARABOLIC}:
        ratio = as_scalar(tf / tg)
        if is_rational(ratio):
            return DEPENDENT, None, f"Translation lengths are commensurable, ratio {format_point(ratio)}."
        return RANK_TWO, None, "Translation lengths are independent over Q."

    if kinds == {ConjClass.HYPERBOLIC}:
        relation = multiplicative_relation(sf, sg, bound)
        if relation is not None:
            m, n = relation
            return DEPENDENT, bound, f"Multipliers satisfy s_f^{m} s_g^{n} = 1."
        if isinstance(sf, Fraction) and isinstance(sg, Fraction):
            if rational_multipliers_independent(sf, sg):
                return RANK_TWO, None, "Rational multipliers are multiplicatively independent."
            return DEPENDENT, None, "Rational multipliers are multiplicatively dependent."
        return RANK_TWO_UP_TO_BOUND, bound, f"No multiplicative relation with exponents up to {bound}."

    return INDETERMINATE, None, "Germs are neither both parabolic nor both hyperbolic."


def check_nonc2_hypotheses(f: PwProjMap, g: PwProjMap, a, base=0, bound: int = None) -> NonC2Report:
    """
    Checks the three hypotheses on the positive arc [base, a].

    Args:
        f, g: The two maps.
        a: Endpoint of the contraction arc.
        base: Common fixed point the maps contract towards; ∞ gives the arc [-∞, a].
        bound (int): Exponent bound of the multiplicative relation search, defaults to
            the `UNIT_SEARCH_BOUND` setting.

    Raises:
        ObstructError: If a coincides with base.
    """
    a, base = as_point(a), as_point(base)
    if a == base:
        raise ObstructError(f"The arc [{format_point(base)}, {format_point(a)}] is degenerate.")

    arc = Arc(base, a, closed=True)
    notes = []
    mf, mg = _single_piece(f, base, a), _single_piece(g, base, a)

    contractions = _is_contraction(mf, base, a) and _is_contraction(mg, base, a)
    if not contractions:
        notes.append(f"f and g are not both single Möbius contractions towards {format_point(base)} on {arc}.")

    commute = restrict_agrees(f.compose(g), g.compose(f), arc)
    if not commute:
        notes.append(f"f and g do not commute on {arc}.")

    if mf is not None and mg is not None and mf.apply(base) == base and mg.apply(base) == base:
        rank, used, note = germ_rank(mf, mg, base, bound)
    else:
        rank, used, note = INDETERMINATE, None, f"The germs at {format_point(base)} are not Möbius germs fixing it."
    notes.append(note)

    logger.log(f"Non-C2 hypotheses on {arc}: {contractions}, {commute}, {rank}", level=logger.DEBUG)
    return NonC2Report(arc, contractions, commute, rank, used, notes)
