"""
Invariants of the minimal polynomial of λ: companion matrix, Galois hyperbolicity and
the torsion order of the abelianized affine group.
"""
from fractions import Fraction

from projline.exceptions.all import NotSquarefreeError, NumFieldError
from projline.numfield.polynomial import IntPolynomial


def _as_poly(p) -> IntPolynomial:
    return p if isinstance(p, IntPolynomial) else IntPolynomial(p)


def companion_matrix(p) -> tuple[tuple[Fraction, ...], ...]:
    """
    Frobenius companion matrix of p, the matrix of multiplication by λ in the basis
    {1, λ, ..., λ^(d-1)}.

    Ones on the subdiagonal, last column -α_j/α_d.

    Raises:
        NumFieldError: If p is constant or has zero constant term.
    """
    p = _as_poly(p)
    if p.degree < 1:
        raise NumFieldError(f"Companion matrix of constant polynomial {p} is undefined.")

    if p.coeffs[0] == 0:
        raise NumFieldError(f"{p} has zero constant term, λ = 0 is excluded.")

    d = p.degree
    lead = Fraction(p.leading)
    rows = []
    for i in range(d):
        row = [Fraction(0)] * d
        if i > 0:
            row[i - 1] = Fraction(1)
        row[d - 1] += -Fraction(p.coeffs[i]) / lead
        rows.append(tuple(row))
    return tuple(rows)


def _chebyshev_like(k: int) -> IntPolynomial:
    """D_k with t^k + t^-k = D_k(t + 1/t): D_0 = 2, D_1 = x, D_k = x·D_(k-1) - D_(k-2)."""
    prev, cur = IntPolynomial((2,)), IntPolynomial((0, 1))
    if k == 0:
        return prev
    for _ in range(k - 1):
        shifted = (0,) + cur.coeffs
        lower = prev.coeffs + (0,) * (len(shifted) - len(prev.coeffs))
        prev, cur = cur, IntPolynomial(a - b for a, b in zip(shifted, lower))
    return cur


def trace_polynomial(g: IntPolynomial) -> IntPolynomial:
    """
    For a palindromic g of degree 2m returns h with g(t) = t^m h(t + 1/t).
    """
    if g.degree % 2 or g.coeffs != g.reciprocal().coeffs:
        raise NumFieldError(f"{g} is not palindromic of even degree.")

    m = g.degree // 2
    total = [0] * (m + 1)
    total[0] = g.coeffs[m]
    for k in range(1, m + 1):
        for i, c in enumerate(_chebyshev_like(k).coeffs):
            total[i] += g.coeffs[m + k] * c
    return IntPolynomial(total)


def is_galois_hyperbolic(p) -> bool:
    """
    Decides whether no complex root of p has absolute value 1.

    Roots on the unit circle come in pairs r, 1/r and so divide gcd(p, t^d p(1/t)).
    That gcd is palindromic, and substituting x = t + 1/t turns its unit-circle roots
    into real roots in (-2, 2), which a Sturm sequence counts.

    Args:
        p (IntPolynomial | list[int]): Squarefree with nonzero constant term.

    Raises:
        NumFieldError: If the constant term is zero or p is constant.
        NotSquarefreeError: If p has repeated factors.
    """
    p = _as_poly(p)
    if p.degree < 1:
        raise NumFieldError(f"Constant polynomial {p} has no roots.")

    if p.coeffs[0] == 0:
        raise NumFieldError(f"{p} has zero constant term, λ = 0 is excluded.")

    if not p.is_squarefree():
        raise NotSquarefreeError(f"{p} is not squarefree.")

    if p(1) == 0 or p(-1) == 0:
        return False

    g = p.gcd(p.reciprocal())
    if g.degree < 1:
        return True

    h = trace_polynomial(g).squarefree_part()
    if h.degree < 1:
        return True
    return h.sturm_count(-2, 2) == 0


def abelianization_torsion(p) -> int:
    """
    |α_d · p_λ(1)|, the value at 1 of the primitive integer form of p.

    Raises:
        NumFieldError: If p(1) = 0.
    """
    p = _as_poly(p).primitive()
    value = p(1)
    if value == 0:
        raise NumFieldError(f"{p} vanishes at 1.")
    return abs(int(value))
