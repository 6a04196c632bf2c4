"""Exact minimal polynomials and Hoffman polynomials.

The minimal polynomial comes from an incremental Krylov-style rank test on
the vectorized powers of B, stopping at the first linear dependency. For a
lambda-doubly stochastic irreducible B with lambda != 0, the Hoffman
polynomial h is the unique minimal-degree polynomial with h(B) = J; it is
always verified against J before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exact import Polynomial
from .matrix import MatrixPowerBasis, RationalMatrix, solve_rational_system
from .stochastic import MatrixClassification, classify


class HoffmanHypothesisError(ValueError):
    """The input fails a hypothesis under which the Hoffman polynomial exists."""

    def __init__(self, hypothesis: str):
        self.hypothesis = hypothesis
        super().__init__(f"Hoffman polynomial undefined: {hypothesis}")


@dataclass(frozen=True)
class MinimalPolynomial:
    """Monic polynomial of least degree annihilating B."""

    poly: Polynomial

    @property
    def degree(self) -> int:
        return self.poly.degree


@dataclass(frozen=True)
class HoffmanPolynomial:
    """h = (n / q(lambda)) * q where (t - lambda) q(t) is the minimal polynomial."""

    h: Polynomial
    q: Polynomial
    lam: Fraction


def minimal_polynomial(
    b: RationalMatrix, basis: Optional[MatrixPowerBasis] = None
) -> MinimalPolynomial:
    """Smallest monic m with m(B) = 0, found at the first dependent power.

    Each candidate degree k tests whether vec(B^k) lies in the exact span of
    the lower vectorized powers; the first consistent system gives the
    (unique, monic) dependency.
    """
    if basis is None:
        basis = MatrixPowerBasis(b)
    k = 1
    while True:
        columns = [basis.vector(j) for j in range(k)]
        solution = solve_rational_system(columns, basis.vector(k))
        if solution is not None:
            coeffs = [-c for c in solution]
            coeffs.append(Fraction(1))
            return MinimalPolynomial(Polynomial(coeffs))
        k += 1


def hoffman_polynomial(
    b: RationalMatrix,
    classification: Optional[MatrixClassification] = None,
    basis: Optional[MatrixPowerBasis] = None,
) -> HoffmanPolynomial:
    """Hoffman polynomial of a lambda-DS irreducible matrix, verified exactly.

    Raises HoffmanHypothesisError naming the failed hypothesis when B is not
    nonnegative with equal line sums, not irreducible, or has lambda = 0.
    """
    cls = classification if classification is not None else classify(b)
    if not cls.nonnegative:
        raise HoffmanHypothesisError("matrix has a negative entry")
    if not cls.irreducible:
        raise HoffmanHypothesisError("matrix is not irreducible")
    if cls.lam is None:
        raise HoffmanHypothesisError("row and column sums do not share a common value")
    if cls.lam == 0:
        raise HoffmanHypothesisError("common line sum is zero")
    if basis is None:
        basis = MatrixPowerBasis(b)
    m = minimal_polynomial(b, basis).poly
    q = m.divide_linear(cls.lam)
    q_at_lam = q(cls.lam)
    if q_at_lam == 0:
        # impossible for a valid input: lambda is a simple eigenvalue
        raise ArithmeticError("internal invariant violated: q(lambda) = 0")
    h = Fraction(b.order, 1) / q_at_lam * q
    if basis.evaluate(h) != RationalMatrix.ones(b.order):
        raise ArithmeticError("internal invariant violated: h(B) != J")
    return HoffmanPolynomial(h=h, q=q, lam=cls.lam)


def hoffman_product_form_check(
    b: RationalMatrix,
    roots: Sequence[complex],
    sample_points: Optional[Sequence[float]] = None,
) -> float:
    """Compare h against its factored form over the numeric roots of q.

    Evaluates (n / q(lambda)) q(t) and (n / prod(lambda - r)) prod(t - r) at
    a fixed sample grid and returns the largest absolute discrepancy. Purely
    diagnostic; nothing exact depends on it.
    """
    info = hoffman_polynomial(b)
    lam = float(info.lam)
    n = b.order
    if sample_points is None:
        sample_points = [0.0, 0.25 * lam, 0.5 * lam, 0.75 * lam, lam, 1.25 * lam, -0.5 * lam]
    pi0 = 1.0 + 0.0j
    for r in roots:
        pi0 *= lam - r
    worst = 0.0
    for s in sample_points:
        exact_side = info.h.eval_complex(s)
        product = 1.0 + 0.0j
        for r in roots:
            product *= s - r
        factored_side = n / pi0 * product
        worst = max(worst, abs(exact_side - factored_side))
    return worst
