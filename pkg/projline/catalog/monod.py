"""
Elements of Monod's groups H(A): piecewise PSL(2, A) maps with breakpoints in H_A.
"""
import re

from typing import Callable, Optional

from sympy import primefactors

from projline.exceptions.all import WitnessFailureError
from projline.logging import logger
from projline.moebius import (
    MoebiusMap,
    as_moebius,
    format_point,
    hyperbolic_fixed_point_witness,
    is_hyperbolic_fixed_point_Z,
)
from projline.pwhomeo import PwProjMap

RING_Z = "Z"

_LOCALIZATION = re.compile(r"^Z\[1/(\d+)\]$")


def in_psl2_localization(n: int) -> Callable[[MoebiusMap], bool]:
    """
    Membership test for PSL(2, Z[1/n]).

    A rational matrix belongs when its det-1 rescaling exists over Q and every
    denominator only involves primes dividing n.
    """
    allowed = set(primefactors(n))

    def member(m: MoebiusMap) -> bool:
        if not m.is_rational():
            return False
        entries = m.canonical
        if entries[0] * entries[3] - entries[1] * entries[2] != 1:
            return False
        return all(set(primefactors(e.denominator)) <= allowed for e in entries)

    return member


def ring_membership(ring: str) -> Optional[Callable[[MoebiusMap], bool]]:
    """
    Builtin membership test for PSL(2, ring), or None for rings without one.

    Known rings are "Z" and the localizations "Z[1/n]".
    """
    if ring == RING_Z:
        return MoebiusMap.is_in_psl2z
    match = _LOCALIZATION.match(ring.replace(" ", ""))
    if match:
        return in_psl2_localization(int(match.group(1)))
    return None


def _certify(point, witnesses: dict, ring: str, member) -> str:
    """Returns how the breakpoint was certified, or raises."""
    own = witnesses.get(point)
    candidates = ([own] if own is not None else []) + [w for w in witnesses.values() if w is not own]
    for w in candidates:
        if hyperbolic_fixed_point_witness(point, w, member):
            return f"fixed by hyperbolic {w}"

    if ring == RING_Z and is_hyperbolic_fixed_point_Z(point):
        return "quadratic irrational"

    raise WitnessFailureError(
        f"No hyperbolic element of PSL(2, {ring}) certifies the breakpoint {format_point(point)}."
    )


def monod_element(pieces, witnesses=None, ring: str = RING_Z, member=None) -> PwProjMap:
    """
    Builds an element of H(A) with certified breakpoints.

    Every breakpoint must be fixed by a hyperbolic witness in PSL(2, A). A witness keyed by
    the breakpoint is tried first, then every other witness supplied. For A = Z a breakpoint
    without a witness is accepted when it is a real quadratic irrational.

    Every piece and every witness must pass the membership test of A: `member` when given,
    otherwise the builtin test for "Z" or "Z[1/n]".

    Args:
        pieces: Piece data as accepted by `PwProjMap.build`.
        witnesses (dict): Breakpoint to `MoebiusMap` (or [[a, b], [c, d]]).
        ring (str): Name of the ring A.
        member (Callable): Predicate on `MoebiusMap` deciding membership in PSL(2, A).

    Raises:
        WitnessFailureError: If A has no membership test, a piece or witness leaves
            PSL(2, A), or a breakpoint is not certified.
    """
    member = member or ring_membership(ring)
    if member is None:
        raise WitnessFailureError(f"No membership test for PSL(2, {ring}); pass one as member.")

    f = PwProjMap.build(pieces)
    witnesses = {k: as_moebius(v) for k, v in (witnesses or {}).items()}

    for m in f.maps:
        if not member(m):
            raise WitnessFailureError(f"Piece {m} is not in PSL(2, {ring}).")
    for point, w in witnesses.items():
        if not member(w):
            raise WitnessFailureError(f"Witness {w} for {format_point(point)} is not in PSL(2, {ring}).")

    for point in f.breakpoints():
        how = _certify(point, witnesses, ring, member)
        logger.log(f"Breakpoint {format_point(point)}: {how}", level=logger.DEBUG)
    return f
