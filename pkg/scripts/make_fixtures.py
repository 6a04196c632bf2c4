#!/usr/bin/env python3
"""Regenerate the fixture corpus under fixtures/.

fig1.mat and fig2.mat are the two hand-worked reference instances the test
suite freezes its expected values against: an 8x8 doubly stochastic
irreducible matrix that is not normal, and a 6x6 normal one that generates
a 3-class association scheme. cyclic_n.mat are scaled directed cycles
(lambda = 3/2); complete_n.mat are complete-graph adjacencies (lambda = n-1).
"""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from schemeforge.io import serialize_matrix
from schemeforge.matrix import RationalMatrix

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"

FIG1_ROWS = [
    ["1/3", "0", "0", "2/3", "0", "0", "0", "0"],
    ["1/3", "1/3", "0", "0", "0", "1/3", "0", "0"],
    ["0", "2/3", "1/3", "0", "0", "0", "0", "0"],
    ["0", "0", "1/3", "1/3", "0", "0", "0", "1/3"],
    ["1/3", "0", "0", "0", "0", "0", "0", "2/3"],
    ["0", "0", "0", "0", "1", "0", "0", "0"],
    ["0", "0", "1/3", "0", "0", "2/3", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "1", "0"],
]

FIG2_ROWS = [
    ["1/2", "1/4", "1/4", "0", "0", "0"],
    ["0", "1/2", "0", "1/4", "1/4", "0"],
    ["0", "0", "1/2", "1/4", "1/4", "0"],
    ["1/4", "0", "0", "1/2", "0", "1/4"],
    ["1/4", "0", "0", "0", "1/2", "1/4"],
    ["0", "1/4", "1/4", "0", "0", "1/2"],
]


def cyclic(n: int, scale: Fraction) -> RationalMatrix:
    return RationalMatrix(
        [[scale if y == (x + 1) % n else 0 for y in range(n)] for x in range(n)]
    )


def complete(n: int) -> RationalMatrix:
    return RationalMatrix([[0 if x == y else 1 for y in range(n)] for x in range(n)])


def main() -> None:
    FIXTURES.mkdir(exist_ok=True)
    targets = {
        "fig1.mat": (
            RationalMatrix([[Fraction(v) for v in row] for row in FIG1_ROWS]),
            "8x8 doubly stochastic, irreducible, not normal",
        ),
        "fig2.mat": (
            RationalMatrix([[Fraction(v) for v in row] for row in FIG2_ROWS]),
            "6x6 normal doubly stochastic; generates a 3-class association scheme",
        ),
    }
    for n in range(3, 9):
        targets[f"cyclic_{n}.mat"] = (
            cyclic(n, Fraction(3, 2)),
            f"directed {n}-cycle scaled by 3/2 (lambda = 3/2)",
        )
    for n in (4, 5):
        targets[f"complete_{n}.mat"] = (
            complete(n),
            f"complete-graph adjacency K_{n} (lambda = {n - 1})",
        )
    for name, (matrix, comment) in targets.items():
        path = FIXTURES / name
        path.write_text(serialize_matrix(matrix, comment=comment), encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
