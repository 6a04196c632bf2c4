"""Matrix file parsing and exact serialization.

File format: '#' comment lines anywhere, then the order n on its own line,
then n rows of n whitespace-separated tokens. Tokens are integers ("2"),
fractions ("1/3"), or decimals ("0.25"); decimals convert exactly, never
through a float.
"""

from __future__ import annotations

from fractions import Fraction

from .matrix import RationalMatrix


class MatrixParseError(ValueError):
    """Malformed matrix file; carries 1-based line and token positions."""

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, entry {column}: {message}")


def parse_rational(token: str) -> Fraction:
    """Exact value of one entry token (integer, p/q, or decimal)."""
    return Fraction(token)


def parse_matrix(text: str) -> RationalMatrix:
    data: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        data.append((lineno, stripped))
    if not data:
        raise MatrixParseError("no matrix data found", 1, 1)
    header_line, header = data[0]
    try:
        n = int(header)
    except ValueError:
        raise MatrixParseError(f"expected matrix order, found {header!r}", header_line, 1) from None
    if n <= 0:
        raise MatrixParseError(f"matrix order must be positive, found {n}", header_line, 1)
    body = data[1:]
    if len(body) != n:
        where = body[-1][0] if body else header_line
        raise MatrixParseError(f"expected {n} data rows, found {len(body)}", where, 1)
    rows: list[list[Fraction]] = []
    for lineno, line in body:
        tokens = line.split()
        if len(tokens) != n:
            raise MatrixParseError(f"expected {n} entries, found {len(tokens)}", lineno, len(tokens))
        row: list[Fraction] = []
        for col, token in enumerate(tokens, start=1):
            try:
                row.append(parse_rational(token))
            except (ValueError, ZeroDivisionError):
                raise MatrixParseError(f"cannot parse entry {token!r}", lineno, col) from None
        rows.append(row)
    return RationalMatrix(rows)


def serialize_matrix(b: RationalMatrix, comment: str | None = None) -> str:
    """Matrix file text that parse_matrix maps back to the same matrix."""
    lines: list[str] = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"# {part}")
    lines.append(str(b.order))
    for row in b.rows:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def fraction_str(value: Fraction) -> str:
    """Report form of a rational: "p/q", or "p" for integers. Never a float."""
    return str(value)


def poly_coefficients(p) -> list[str]:
    """Ascending coefficient list in report form."""
    return [fraction_str(c) for c in p.coeffs]


def matrix_grid(b: RationalMatrix) -> list[list[str]]:
    """Row-major grid of report-form entries."""
    return [[fraction_str(v) for v in row] for row in b.rows]


def zero_one_grid(b: RationalMatrix) -> list[list[int]]:
    """Row-major 0/1 grid for indicator matrices."""
    return [[int(v) for v in row] for row in b.rows]
