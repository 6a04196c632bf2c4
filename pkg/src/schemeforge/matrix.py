"""Dense square matrices over exact rationals.

Provides the products, transposes, traces, the normalized trace inner
product, matrix-polynomial evaluation, and exact linear solves (fraction-free
elimination) that the rest of the pipeline is built on. Matrices are
immutable; every operation returns a fresh value.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

from .exact import Polynomial, Scalar

Row = tuple[Fraction, ...]


class MatrixOrderError(ValueError):
    """Operands have incompatible orders."""


class RationalMatrix:
    """Immutable n x n matrix of Fractions, row-major indexing (x, y)."""

    __slots__ = ("order", "rows")

    def __init__(self, rows: Iterable[Iterable[Scalar]]):
        grid = tuple(tuple(Fraction(v) for v in row) for row in rows)
        n = len(grid)
        if n == 0:
            raise ValueError("matrix must have positive order")
        for row in grid:
            if len(row) != n:
                raise ValueError(f"row of length {len(row)} in matrix of order {n}")
        object.__setattr__(self, "order", n)
        object.__setattr__(self, "rows", grid)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "RationalMatrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def ones(cls, n: int) -> "RationalMatrix":
        """The all-ones matrix J."""
        return cls([[1] * n for _ in range(n)])

    def __getitem__(self, x: int) -> Row:
        return self.rows[x]

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.rows)

    def _require_same_order(self, other: "RationalMatrix") -> None:
        if self.order != other.order:
            raise MatrixOrderError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._require_same_order(other)
        return RationalMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._require_same_order(other)
        return RationalMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix([[-a for a in row] for row in self.rows])

    def __rmul__(self, scalar: Scalar) -> "RationalMatrix":
        c = Fraction(scalar)
        return RationalMatrix([[c * a for a in row] for row in self.rows])

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._require_same_order(other)
        n = self.order
        cols = tuple(zip(*other.rows))
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = Fraction(0)
                for a, b in zip(row, col):
                    if a:
                        acc += a * b
                out_row.append(acc)
            out.append(out_row)
        return RationalMatrix(out)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(list(zip(*self.rows)))

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.order)), Fraction(0))

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.rows for v in row)

    def flatten(self) -> Row:
        return tuple(v for row in self.rows for v in row)

    def to_float(self):
        """Dense float copy for the numeric sidecar (import numpy lazily)."""
        import numpy as np

        return np.array([[float(v) for v in row] for row in self.rows], dtype=float)

    def __repr__(self) -> str:
        return f"RationalMatrix({[list(map(str, r)) for r in self.rows]!r})"

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.rows)


def poly_eval(p: Polynomial, b: RationalMatrix) -> RationalMatrix:
    """Horner evaluation p(B); the constant term multiplies I.

    The zero polynomial maps every matrix to the zero matrix.
    """
    n = b.order
    acc = RationalMatrix.zeros(n)
    for c in reversed(p.coeffs):
        acc = acc @ b
        if c:
            acc = acc + _scalar_matrix(n, c)
    return acc


def _scalar_matrix(n: int, c: Fraction) -> RationalMatrix:
    return RationalMatrix([[c if i == j else 0 for j in range(n)] for i in range(n)])


def trace_inner_product(m: RationalMatrix, n: RationalMatrix) -> Fraction:
    """(1/order) * trace(M N^T), computed as the normalized Hadamard sum.

    Both operands are real rational, so conjugation is the identity and the
    trace form and the entrywise form coincide.
    """
    m._require_same_order(n)
    acc = Fraction(0)
    for ra, rb in zip(m.rows, n.rows):
        for a, b in zip(ra, rb):
            if a and b:
                acc += a * b
    return acc / m.order


class MatrixPowerBasis:
    """Cached powers I, B, B^2, ... of one matrix, plus their flattenings.

    Powers are built incrementally by one multiplication each; every power
    up to the working degree is needed anyway, so repeated squaring would
    not help.
    """

    def __init__(self, base: RationalMatrix):
        self.base = base
        self._powers: list[RationalMatrix] = [RationalMatrix.identity(base.order)]
        self._vectors: list[Row] = [self._powers[0].flatten()]

    def power(self, k: int) -> RationalMatrix:
        while len(self._powers) <= k:
            self._powers.append(self._powers[-1] @ self.base)
            self._vectors.append(self._powers[-1].flatten())
        return self._powers[k]

    def vector(self, k: int) -> Row:
        self.power(k)
        return self._vectors[k]

    @property
    def powers(self) -> list[RationalMatrix]:
        return list(self._powers)

    def evaluate(self, p: Polynomial) -> RationalMatrix:
        """p(B) as a linear combination of cached powers (no fresh products)."""
        n = self.base.order
        if p.is_zero():
            return RationalMatrix.zeros(n)
        self.power(p.degree)
        out = [[Fraction(0)] * n for _ in range(n)]
        for k, c in enumerate(p.coeffs):
            if not c:
                continue
            rows = self._powers[k].rows
            for i in range(n):
                src = rows[i]
                dst = out[i]
                for j in range(n):
                    if src[j]:
                        dst[j] += c * src[j]
        return RationalMatrix(out)


def algebra_membership(
    m: RationalMatrix, basis: MatrixPowerBasis, degree: Optional[int] = None
) -> Optional[Polynomial]:
    """Express M as a polynomial of degree <= `degree` in the basis matrix.

    Solves the exact linear system over the vectorized powers; returns the
    coefficient polynomial when consistent, None when M is outside the span.
    """
    if degree is None:
        degree = len(basis._powers) - 1
    columns = [basis.vector(k) for k in range(degree + 1)]
    solution = solve_rational_system(columns, m.flatten())
    if solution is None:
        return None
    return Polynomial(solution)


# ---------------------------------------------------------------------------
# Exact linear solving: fraction-free (Bareiss-style) elimination.
# ---------------------------------------------------------------------------


def _cleared_int_row(row: Sequence[Fraction]) -> list[int]:
    """Scale one row by the lcm of its denominators; solutions unchanged."""
    den = 1
    for v in row:
        d = v.denominator
        den = den // gcd(den, d) * d
    out = []
    for v in row:
        scaled = v * den
        out.append(scaled.numerator)  # denominator is 1 after scaling
    return out


def solve_rational_system(
    columns: Sequence[Sequence[Fraction]], target: Sequence[Fraction]
) -> Optional[list[Fraction]]:
    """Solve sum_j x_j * columns[j] = target exactly over the rationals.

    Returns one solution (free variables set to zero) or None when the
    system is inconsistent. Forward elimination is fraction-free on
    integer-cleared rows with first-nonzero pivoting, so every intermediate
    entry is an exact minor of the cleared system; back-substitution runs
    over Fractions.
    """
    k = len(columns)
    m = len(target)
    rows: list[list[int]] = []
    for r in range(m):
        frac_row = [Fraction(columns[j][r]) for j in range(k)]
        frac_row.append(Fraction(target[r]))
        if any(frac_row):
            rows.append(_cleared_int_row(frac_row))
    width = k + 1
    pivot_cols: list[int] = []
    rank = 0
    prev = 1
    for c in range(width):
        pr = None
        for i in range(rank, len(rows)):
            if rows[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        rows[rank], rows[pr] = rows[pr], rows[rank]
        piv = rows[rank][c]
        pivot_row = rows[rank]
        for i in range(rank + 1, len(rows)):
            row = rows[i]
            factor = row[c]
            for j in range(width):
                num = row[j] * piv - factor * pivot_row[j]
                q, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("fraction-free elimination lost exactness")
                row[j] = q
        prev = piv
        pivot_cols.append(c)
        rank += 1
        if rank == len(rows):
            break
    if pivot_cols and pivot_cols[-1] == k:
        return None  # pivot in the target column: inconsistent
    solution = [Fraction(0)] * k
    for r in range(rank - 1, -1, -1):
        c = pivot_cols[r]
        acc = Fraction(rows[r][k])
        for j in range(c + 1, k):
            if rows[r][j]:
                acc -= rows[r][j] * solution[j]
        solution[c] = acc / rows[r][c]
    return solution
