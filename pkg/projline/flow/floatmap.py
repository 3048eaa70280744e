"""
Float valued Möbius maps and quadratic vector fields on the projective line.
"""
import math

import numpy


class FloatMoebiusMap:
    """
    Möbius map with double precision entries, as produced by the flows.

    Example:

    ```py
    m = FloatMoebiusMap([[1.0, 0.0], [0.5, 1.0]])
    m(2.0)  # 1.0
    ```
    """
    __slots__ = ("matrix",)

    def __init__(self, matrix):
        self.matrix = numpy.asarray(matrix, dtype=float).reshape(2, 2)

    def apply(self, t: float) -> float:
        """Projective action on floats, with math.inf standing for ∞."""
        (a, b), (c, d) = self.matrix
        if math.isinf(t):
            return a / c if c != 0 else math.inf
        den = c * t + d
        if den == 0:
            return math.inf
        return (a * t + b) / den

    __call__ = apply

    def distance(self, other) -> float:
        """Max-norm distance between the matrices."""
        other = other.matrix if isinstance(other, FloatMoebiusMap) else numpy.asarray(other, dtype=float)
        return float(numpy.max(numpy.abs(self.matrix - other)))

    def to_json(self) -> list:
        return self.matrix.tolist()

    def __repr__(self):
        return f"FloatMoebiusMap({self.matrix.tolist()})"


class QuadraticField:
    """The vector field X(t) = q0 + q1·t + q2·t²."""
    __slots__ = ("q0", "q1", "q2")

    def __init__(self, q0: float, q1: float, q2: float):
        self.q0, self.q1, self.q2 = float(q0), float(q1), float(q2)

    def __call__(self, t: float) -> float:
        return self.q0 + self.q1 * t + self.q2 * t * t

    def is_zero(self, tol: float = 0.0) -> bool:
        return max(abs(self.q0), abs(self.q1), abs(self.q2)) <= tol

    def zeros(self) -> list:
        """Real zeros in increasing order; the field also vanishes at ∞ when q2 = 0."""
        coeffs = numpy.trim_zeros(numpy.array([self.q2, self.q1, self.q0]), "f")
        if len(coeffs) < 2:
            return []
        roots = numpy.roots(coeffs)
        return sorted(float(r.real) for r in roots if abs(r.imag) <= 1e-12 * max(1.0, abs(r.real)))

    def to_json(self) -> dict:
        return {"q0": self.q0, "q1": self.q1, "q2": self.q2}

    def __repr__(self):
        return f"QuadraticField({self.q0!r}, {self.q1!r}, {self.q2!r})"
