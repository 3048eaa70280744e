"""
Linked pairs, one-sided hyperbolic breakpoints and the germ morphisms at infinity.
"""
from typing import NamedTuple

from projline.catalog import preset_monod_hz
from projline.logging import logger
from projline.moebius import format_point
from projline.pwhomeo import AffineGerm, PwProjMap, germ_at, linked_pairs

RIGHT_HYPERBOLIC = "right-hyperbolic"
LEFT_HYPERBOLIC = "left-hyperbolic"


class HyperbolicBreak(NamedTuple):
    """A breakpoint where one side has derivative 1 and the other does not."""
    generator: str
    point: object
    left: object
    right: object
    side: str


class ObstructionReport(NamedTuple):
    names: tuple
    linked: list
    hyperbolic_breaks: list
    notes: list

    def is_empty(self) -> bool:
        return not self.linked and not self.hyperbolic_breaks

    def to_json(self) -> dict:
        return {
            "names": list(self.names),
            "linked": self.linked,
            "hyperbolic_breaks": [
                {
                    "generator": b.generator,
                    "point": b.point,
                    "derivatives": [b.left, b.right],
                    "side": b.side,
                }
                for b in self.hyperbolic_breaks
            ],
            "notes": self.notes,
        }


def hyperbolic_breaks(name: str, f: PwProjMap) -> list:
    """Breakpoints of f that are the identity on one side only, to first order."""
    found = []
    for point, left, right in f.c1_defect_points():
        if left == 1:
            found.append(HyperbolicBreak(name, point, left, right, RIGHT_HYPERBOLIC))
        elif right == 1:
            found.append(HyperbolicBreak(name, point, left, right, LEFT_HYPERBOLIC))
    return found


def audit_pair(name_f: str, f: PwProjMap, name_g: str, g: PwProjMap) -> ObstructionReport:
    """
    Collects the linked configurations of f and g and the one-sided hyperbolic
    breakpoints of both.

    Example:

    ```py
    H = preset_monod_hz()
    report = audit_pair("f", H["f"], "g", H["g"])
    report.linked[0].doubly_linked  # True
    ```
    """
    notes = []
    if f.is_identity() or g.is_identity():
        linked = []
        notes.append("An identity element has no successive fixed pairs.")
    else:
        linked = linked_pairs(f, g)

    for config in linked:
        a, b = config.f_pair
        c, d = config.g_pair
        kind = "doubly linked" if config.doubly_linked else "linked"
        notes.append(
            f"({format_point(a)}, {format_point(b)}) of {name_f} and "
            f"({format_point(c)}, {format_point(d)}) of {name_g} are {kind}."
        )

    breaks = hyperbolic_breaks(name_f, f)
    if not (name_g == name_f and g == f):
        breaks += hyperbolic_breaks(name_g, g)

    logger.log(
        f"Audit of {name_f}, {name_g}: {len(linked)} linked, {len(breaks)} hyperbolic breaks",
        level=logger.DEBUG,
    )
    return ObstructionReport((name_f, name_g), linked, breaks, notes)


def rho(f: PwProjMap, side: str) -> AffineGerm:
    """
    The germ morphism ρ_± at +∞ or -∞.

    Raises:
        DoesNotFixInfinityError: If f moves ∞.
    """
    return germ_at(f, side)


def in_rho_kernel(f: PwProjMap, side: str) -> bool:
    return rho(f, side).is_identity()


def hz_linked_report() -> ObstructionReport:
    """The audit of the linked pair f, g of H(Z)."""
    gens = preset_monod_hz()
    return audit_pair("f", gens["f"], "g", gens["g"])
