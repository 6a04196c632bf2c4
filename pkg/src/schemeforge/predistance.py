"""Predistance polynomial bases.

The matrix B induces an inner product <p, q> = (1/n) trace(p(B) q(B)^T) on
polynomials of degree at most d (d + 1 = degree of the minimal polynomial).
Gram-Schmidt over the monomials, with a doubling fallback that keeps every
basis polynomial nonvanishing at lambda, followed by the normalization
p_i = (q_i(lambda) / |q_i|^2) q_i, yields the predistance family: orthogonal,
deg p_i = i, |p_i|^2 = p_i(lambda) > 0, and sum_i p_i(B) = J.

The normalization map above is the rational-arithmetic equivalent of scaling
the unit-norm polynomial r_i by r_i(lambda); it never materializes a square
root.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import Polynomial
from .hoffman import MinimalPolynomial, hoffman_polynomial, minimal_polynomial
from .matrix import MatrixPowerBasis, RationalMatrix, trace_inner_product
from .stochastic import MatrixClassification, classify


class PredistanceHypothesisError(ValueError):
    """The input fails a hypothesis of the predistance construction."""

    def __init__(self, hypothesis: str):
        self.hypothesis = hypothesis
        super().__init__(f"predistance basis undefined: {hypothesis}")


def poly_inner(
    p: Polynomial,
    q: Polynomial,
    b: RationalMatrix,
    basis: Optional[MatrixPowerBasis] = None,
) -> Fraction:
    """Exact value of <p, q> = (1/n) trace(p(B) q(B)^T).

    Real rational data throughout, so conjugation is the identity.
    """
    if basis is None:
        basis = MatrixPowerBasis(b)
    return trace_inner_product(basis.evaluate(p), basis.evaluate(q))


def lambda_avoiding_gram_schmidt(
    b: RationalMatrix,
    lam: Fraction,
    d: int,
    basis: Optional[MatrixPowerBasis] = None,
) -> list[Polynomial]:
    """Orthogonalize the monomials 1, t, ..., t^d while avoiding roots at lambda.

    Classical (not modified) Gram-Schmidt is enough because the arithmetic
    is exact. When the plain residual r_j vanishes at lambda, the doubled
    candidate 2 t^j - sum(projections) is used instead, which evaluates to
    lambda^j != 0 at lambda.
    """
    lam = Fraction(lam)
    if lam == 0:
        raise PredistanceHypothesisError("lambda is zero")
    if basis is None:
        basis = MatrixPowerBasis(b)
    polys: list[Polynomial] = []
    evaluations: list[RationalMatrix] = []
    norms_sq: list[Fraction] = []
    for j in range(d + 1):
        monomial = Polynomial.monomial(j)
        monomial_mat = basis.power(j)
        candidate = monomial
        for ell in range(j):
            coeff = trace_inner_product(evaluations[ell], monomial_mat) / norms_sq[ell]
            if coeff:
                candidate = candidate - coeff * polys[ell]
        if candidate(lam) == 0:
            # doubling fallback: candidate + t^j evaluates to lam^j at lambda
            candidate = candidate + monomial
        mat = basis.evaluate(candidate)
        norm_sq = trace_inner_product(mat, mat)
        if norm_sq == 0:
            raise PredistanceHypothesisError(
                f"inner product degenerate at degree {j}; d exceeds deg(minpoly) - 1"
            )
        polys.append(candidate)
        evaluations.append(mat)
        norms_sq.append(norm_sq)
    return polys


@dataclass(frozen=True)
class PredistanceBasis:
    """The family p_0..p_d with cached norms and evaluations at B."""

    polys: tuple[Polynomial, ...]
    lam: Fraction
    norms_sq: tuple[Fraction, ...]
    evaluations: tuple[RationalMatrix, ...]

    @property
    def d(self) -> int:
        return len(self.polys) - 1


def predistance_basis(
    b: RationalMatrix,
    classification: Optional[MatrixClassification] = None,
    basis: Optional[MatrixPowerBasis] = None,
    minimal: Optional[MinimalPolynomial] = None,
) -> PredistanceBasis:
    """Construct and fully check the predistance family of B.

    Requires B normal, lambda-doubly stochastic, irreducible, lambda != 0.
    Every invariant of the family (degrees, orthogonality, norm values,
    positivity, Hoffman sum) is asserted before returning.
    """
    cls = classification if classification is not None else classify(b)
    if not cls.nonnegative:
        raise PredistanceHypothesisError("matrix has a negative entry")
    if not cls.irreducible:
        raise PredistanceHypothesisError("matrix is not irreducible")
    if cls.lam is None:
        raise PredistanceHypothesisError("row and column sums do not share a common value")
    if not cls.normal:
        raise PredistanceHypothesisError("matrix is not normal")
    if cls.lam == 0:
        raise PredistanceHypothesisError("common line sum is zero")
    if basis is None:
        basis = MatrixPowerBasis(b)
    if minimal is None:
        minimal = minimal_polynomial(b, basis)
    d = minimal.degree - 1
    orthogonal = lambda_avoiding_gram_schmidt(b, cls.lam, d, basis)
    polys: list[Polynomial] = []
    evaluations: list[RationalMatrix] = []
    norms_sq: list[Fraction] = []
    for q in orthogonal:
        q_mat = basis.evaluate(q)
        q_norm_sq = trace_inner_product(q_mat, q_mat)
        scale = q(cls.lam) / q_norm_sq
        p = scale * q
        polys.append(p)
        evaluations.append(scale * q_mat)
        norms_sq.append(scale * scale * q_norm_sq)
    result = PredistanceBasis(
        polys=tuple(polys),
        lam=cls.lam,
        norms_sq=tuple(norms_sq),
        evaluations=tuple(evaluations),
    )
    _assert_invariants(result, b)
    return result


def _assert_invariants(family: PredistanceBasis, b: RationalMatrix) -> None:
    polys, lam = family.polys, family.lam
    if polys[0] != Polynomial([1]):
        raise ArithmeticError("internal invariant violated: p_0 != 1")
    total = RationalMatrix.zeros(b.order)
    for i, (p, mat, norm_sq) in enumerate(zip(polys, family.evaluations, family.norms_sq)):
        if p.degree != i:
            raise ArithmeticError(f"internal invariant violated: deg(p_{i}) != {i}")
        value = p(lam)
        if value <= 0 or value != norm_sq:
            raise ArithmeticError(f"internal invariant violated: |p_{i}|^2 != p_{i}(lambda) > 0")
        if trace_inner_product(mat, mat) != norm_sq:
            raise ArithmeticError(f"internal invariant violated: cached norm of p_{i}")
        for j in range(i):
            if trace_inner_product(family.evaluations[j], mat) != 0:
                raise ArithmeticError(f"internal invariant violated: <p_{j}, p_{i}> != 0")
        total = total + mat
    if total != RationalMatrix.ones(b.order):
        raise ArithmeticError("internal invariant violated: sum of p_i(B) != J")


def verify_hoffman_sum(family: PredistanceBasis, b: RationalMatrix) -> bool:
    """Check sum_i p_i(B) = J, and cross-check sum_i p_i = h coefficient-wise."""
    total_mat = RationalMatrix.zeros(b.order)
    for mat in family.evaluations:
        total_mat = total_mat + mat
    if total_mat != RationalMatrix.ones(b.order):
        return False
    total_poly = Polynomial()
    for p in family.polys:
        total_poly = total_poly + p
    return total_poly == hoffman_polynomial(b).h
