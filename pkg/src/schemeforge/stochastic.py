"""Classification of rational matrices and the distinct-entry decomposition.

classify() reports the four exact flags the rest of the pipeline gates on:
nonnegativity, a common line sum (lambda-double stochasticity), normality,
and irreducibility. It never fails; bad inputs just classify negatively.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .digraph import Digraph, is_strongly_connected
from .matrix import RationalMatrix


@dataclass(frozen=True)
class MatrixClassification:
    """Exact classification flags of one square rational matrix.

    lam is the common row/column sum, present only when the matrix is
    nonnegative and all 2n line sums agree (i.e. exactly when the matrix is
    lambda-doubly stochastic).
    """

    order: int
    nonnegative: bool
    lam: Optional[Fraction]
    normal: bool
    irreducible: bool

    @property
    def doubly_stochastic(self) -> bool:
        return self.lam is not None

    @property
    def hoffman_ready(self) -> bool:
        """Whether a Hoffman polynomial exists: lambda-DS, irreducible, lambda != 0."""
        return self.lam is not None and self.irreducible and self.lam != 0


def classify(b: RationalMatrix) -> MatrixClassification:
    n = b.order
    nonnegative = all(v >= 0 for row in b.rows for v in row)
    row_sums = [sum(row, Fraction(0)) for row in b.rows]
    col_sums = [sum(col, Fraction(0)) for col in zip(*b.rows)]
    lam: Optional[Fraction] = None
    if nonnegative and all(s == row_sums[0] for s in row_sums + col_sums):
        lam = row_sums[0]
    bt = b.transpose()
    normal = (b @ bt) == (bt @ b)
    pattern = Digraph([[1 if v != 0 else 0 for v in row] for row in b.rows])
    irreducible = is_strongly_connected(pattern)
    return MatrixClassification(
        order=n, nonnegative=nonnegative, lam=lam, normal=normal, irreducible=irreducible
    )


@dataclass(frozen=True)
class EntryDecomposition:
    """B = sum_i coefficients[i] * indicators[i] over the distinct positive entries.

    Coefficients are strictly ascending; indicator supports are pairwise
    disjoint and together cover exactly the nonzero positions.
    """

    coefficients: tuple[Fraction, ...]
    indicators: tuple[RationalMatrix, ...]

    def reconstruct(self, order: int) -> RationalMatrix:
        acc = RationalMatrix.zeros(order)
        for c, f in zip(self.coefficients, self.indicators):
            acc = acc + c * f
        return acc


def entry_decomposition(b: RationalMatrix) -> EntryDecomposition:
    """Group positions of B by distinct positive value."""
    for x, row in enumerate(b.rows):
        for y, v in enumerate(row):
            if v < 0:
                raise ValueError(f"entry decomposition requires nonnegativity; entry ({x}, {y}) is {v}")
    values = sorted({v for row in b.rows for v in row if v > 0})
    indicators = [
        RationalMatrix([[1 if v == c else 0 for v in row] for row in b.rows]) for c in values
    ]
    return EntryDecomposition(coefficients=tuple(values), indicators=tuple(indicators))


def random_lambda_ds(n: int, k: int, seed: int) -> RationalMatrix:
    """Random positive combination of k random permutation matrices.

    Output is lambda-doubly stochastic with lambda equal to the sum of the
    drawn coefficients. Deterministic under the seed; coefficients keep
    small denominators so downstream exact arithmetic stays light.
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    rng = random.Random(seed)
    grid = [[Fraction(0)] * n for _ in range(n)]
    for _ in range(k):
        coeff = Fraction(rng.randint(1, 6), rng.randint(1, 4))
        image = list(range(n))
        rng.shuffle(image)
        for x in range(n):
            grid[x][image[x]] += coeff
    return RationalMatrix(grid)
