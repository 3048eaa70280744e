"""
One-parameter flows through Möbius maps.

A hyperbolic or parabolic map M is the time-one map of the flow s ↦ exp(s·L), with L the
principal logarithm of the determinant-one, positive-trace representative M̂ of M. The
flow acts on the line as the vector field X(t) = b' + (a' - d')·t - c'·t² read off
L = [[a', b'], [c', d']].

Parabolic maps take an exact path: M̂ = M / (tr M / 2) and L = M̂ - I is nilpotent.
Everything else in this module is double precision.
"""
import math

from fractions import Fraction
from typing import NamedTuple, Optional

import numpy
import scipy.linalg

from projline.exceptions.all import (
    EllipticInputError,
    NegativeTraceError,
    NotInFlowError,
    TrivialFlowError,
)
from projline.logging import logger
from projline.moebius import ConjClass, MoebiusMap, as_moebius
from projline.numfield import to_float
from projline.numfield.scalar import as_scalar
from projline.settings import SETTINGS
from projline.flow.floatmap import FloatMoebiusMap, QuadraticField

IDENTITY = numpy.eye(2)


class FlowGenerator(NamedTuple):
    """
    Trace-free generator L of a flow. `exact_nilpotent` holds L as exact rows when the
    source map is parabolic.
    """
    L: numpy.ndarray
    exact_nilpotent: Optional[tuple] = None

    def is_nilpotent(self) -> bool:
        return self.exact_nilpotent is not None

    def to_json(self) -> dict:
        return {
            "L": self.L.tolist(),
            "exact_nilpotent": None if self.exact_nilpotent is None else [list(row) for row in self.exact_nilpotent],
        }


def _float_rows(rows) -> numpy.ndarray:
    return numpy.array([[to_float(x) for x in row] for row in rows], dtype=float)


def normalized_float(m: MoebiusMap) -> numpy.ndarray:
    """M̂ in floats: determinant one and nonnegative trace."""
    matrix = _float_rows(m.rows)
    matrix = matrix / numpy.sqrt(numpy.linalg.det(matrix))
    if numpy.trace(matrix) < 0:
        matrix = -matrix
    return matrix


def exact_unipotent(m: MoebiusMap) -> tuple:
    """M̂ = M / (tr M / 2) for a parabolic map, as exact rows."""
    half_trace = as_scalar(m.trace() / 2)
    return tuple(tuple(as_scalar(x / half_trace) for x in row) for row in m.rows)


def _classify(m: MoebiusMap) -> ConjClass:
    kind = m.classify()
    if kind == ConjClass.ELLIPTIC:
        raise EllipticInputError(f"{m} is elliptic: no real flow has it as time-one map.")
    return kind


def generator_of(m) -> FlowGenerator:
    """
    Example:

    ```py
    generator_of([[1, 0], [1, 1]]).exact_nilpotent  # ((0, 0), (1, 0))
    ```

    Raises:
        EllipticInputError: For elliptic maps.
        TrivialFlowError: For the identity, which is the time-one map of no nonzero flow.
        NegativeTraceError: If the positive-trace representative has no real logarithm.
    """
    m = as_moebius(m)
    kind = _classify(m)

    if kind == ConjClass.IDENTITY:
        raise TrivialFlowError(f"{m} is the identity: it generates no flow.")
    if kind == ConjClass.PARABOLIC:
        (a, b), (c, d) = exact_unipotent(m)
        nilpotent = ((as_scalar(a - 1), b), (c, as_scalar(d - 1)))
        return FlowGenerator(_float_rows(nilpotent), nilpotent)

    normalized = normalized_float(m)
    eigenvalues = numpy.linalg.eigvals(normalized)
    if numpy.any(numpy.abs(eigenvalues.imag) > 0) or numpy.any(eigenvalues.real <= 0):
        raise NegativeTraceError(f"{m} has no positive-trace representative with positive eigenvalues.")

    L = scipy.linalg.logm(normalized)
    if numpy.max(numpy.abs(numpy.imag(L))) > SETTINGS["FLOW_TOLERANCE"]:
        raise NegativeTraceError(f"The logarithm of {m} is not real.")
    L = numpy.real(L)
    # Trace projection onto sl(2, R).
    L = L - numpy.trace(L) / 2 * IDENTITY
    return FlowGenerator(L)


def as_generator(value) -> FlowGenerator:
    if isinstance(value, FlowGenerator):
        return value
    if isinstance(value, MoebiusMap):
        return generator_of(value)
    return FlowGenerator(numpy.asarray(value, dtype=float).reshape(2, 2))


def flow_at(generator, s) -> FloatMoebiusMap:
    """
    exp(s·L). For nilpotent generators this is I + s·L, computed exactly when s is
    rational.
    """
    generator = as_generator(generator)
    if generator.is_nilpotent():
        if isinstance(s, (int, Fraction)):
            rows = [
                [as_scalar(int(i == j) + Fraction(s) * generator.exact_nilpotent[i][j]) for j in range(2)]
                for i in range(2)
            ]
            return FloatMoebiusMap(_float_rows(rows))
        return FloatMoebiusMap(IDENTITY + float(s) * generator.L)
    return FloatMoebiusMap(scipy.linalg.expm(float(s) * generator.L))


def vector_field(generator) -> QuadraticField:
    """X(t) = b' + (a' - d')·t - c'·t² for L = [[a', b'], [c', d']]."""
    (a, b), (c, d) = as_generator(generator).L
    return QuadraticField(b, a - d, -c)


def time_of(generator, g, tol: float = None) -> float:
    """
    The time s with exp(s·L) = ĝ, for ĝ the determinant-one, positive-trace
    representative of g.

    Raises:
        NotInFlowError: If g does not commute with the flow, has the wrong type, or no
            time reproduces it within tol.
        EllipticInputError: If g is elliptic.
        TrivialFlowError: If the generator is zero.
    """
    tol = SETTINGS["FLOW_TOLERANCE"] if tol is None else tol
    generator = as_generator(generator)
    if not numpy.any(generator.L):
        raise TrivialFlowError("The zero generator has no nontrivial times.")
    g = as_moebius(g)
    kind = _classify(g)
    target = normalized_float(g)

    if kind == ConjClass.IDENTITY:
        return 0.0

    one = scipy.linalg.expm(generator.L)
    if numpy.max(numpy.abs(one @ target - target @ one)) > tol * max(1.0, numpy.max(numpy.abs(target))):
        raise NotInFlowError(f"{g} does not commute with the flow.")

    if generator.is_nilpotent():
        if kind != ConjClass.PARABOLIC:
            raise NotInFlowError(f"{g} is not parabolic, the flow is.")
        (a, b), (c, d) = exact_unipotent(g)
        target_nilpotent = ((as_scalar(a - 1), b), (c, as_scalar(d - 1)))
        i, j = max(
            ((i, j) for i in range(2) for j in range(2)),
            key=lambda ij: abs(generator.L[ij[0]][ij[1]]),
        )
        s = to_float(target_nilpotent[i][j]) / generator.L[i][j]
    else:
        if kind != ConjClass.HYPERBOLIC:
            raise NotInFlowError(f"{g} is not hyperbolic, the flow is.")
        log_target = numpy.real(scipy.linalg.logm(target))
        s = float(numpy.sum(log_target * generator.L) / numpy.sum(generator.L * generator.L))

    if not math.isfinite(s):
        raise NotInFlowError(f"{g} is not on the flow: no finite time reproduces it.")

    defect = flow_at(generator, s).distance(target)
    if defect > tol * max(1.0, abs(s)):
        raise NotInFlowError(f"{g} is not on the flow: closest time {s} misses by {defect}.")
    return s


def time_one_defect(m) -> float:
    """‖exp(L) - M̂‖∞ for L = generator_of(M)."""
    m = as_moebius(m)
    generator = generator_of(m)
    if generator.is_nilpotent():
        return flow_at(generator, 1).distance(_float_rows(exact_unipotent(m)))
    return flow_at(generator, 1).distance(normalized_float(m))


def verify_time_one(m, tol: float = None) -> bool:
    tol = SETTINGS["FLOW_TOLERANCE"] if tol is None else tol
    defect = time_one_defect(m)
    if defect > tol:
        logger.log(f"Time-one map of {as_moebius(m)} misses by {defect}", level=logger.DEBUG)
    return defect <= tol


def flow_law_defect(generator, s: float, u: float) -> float:
    """
    ‖exp((s + u)·L) - exp(s·L)·exp(u·L)‖∞, relative to the size of the product once its
    entries exceed 1.
    """
    generator = as_generator(generator)
    product = flow_at(generator, s).matrix @ flow_at(generator, u).matrix
    scale = max(1.0, float(numpy.max(numpy.abs(product))))
    return flow_at(generator, float(s) + float(u)).distance(product) / scale
