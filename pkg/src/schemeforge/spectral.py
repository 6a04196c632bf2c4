"""Floating-point spectral sidecar.

Numeric roots of the (exact) minimal polynomial via Durand-Kerner
simultaneous iteration, Lagrange-interpolation primitive idempotents, and a
Perron sanity report. Everything here is advisory: the exact pipeline never
consumes these values for an accept/reject decision.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .exact import Polynomial
from .matrix import RationalMatrix
from .stochastic import MatrixClassification, classify

ITERATION_TOL = 1e-12
ASSERTION_TOL = 1e-9


class RootConvergenceError(RuntimeError):
    """Durand-Kerner failed to converge; carries the best residuals seen."""

    def __init__(self, residuals: Sequence[float]):
        self.residuals = tuple(residuals)
        super().__init__(f"root iteration did not converge; residuals {self.residuals}")


class SpectrumDegeneracyError(RuntimeError):
    """Two numeric eigenvalues are too close to separate idempotents."""


@dataclass(frozen=True)
class Spectrum:
    """Numeric roots (Perron value first) with per-root residuals |m(root)|."""

    eigenvalues: tuple[complex, ...]
    residuals: tuple[float, ...]


def _conjugate_symmetrize(values: list[complex]) -> list[complex]:
    """Pair roots with their conjugates and average out asymmetry.

    Real coefficients force conjugate-closed root sets; the iteration only
    delivers that up to rounding, so each root is matched to the nearest
    conjugate (possibly itself, making it real) and the pair is replaced by
    an exactly conjugate pair.
    """
    order = sorted(range(len(values)), key=lambda i: (values[i].real, values[i].imag))
    remaining = list(order)
    out: dict[int, complex] = {}
    while remaining:
        i = remaining.pop(0)
        z = values[i]
        best_j = i
        best_gap = abs(z - z.conjugate())
        for j in remaining:
            gap = abs(z - values[j].conjugate())
            if gap < best_gap:
                best_gap = gap
                best_j = j
        if best_j == i:
            out[i] = complex(z.real, 0.0)
        else:
            remaining.remove(best_j)
            center = (z + values[best_j].conjugate()) / 2
            out[i] = center
            out[best_j] = center.conjugate()
    return [out[i] for i in range(len(values))]


def roots(m: Polynomial, tol: float = ITERATION_TOL, max_iter: int = 500) -> Spectrum:
    """All roots of m by Durand-Kerner from a perturbed-circle start.

    m should be squarefree (true for minimal polynomials of normal
    matrices); repeated roots stall the quadratic convergence and will
    usually trip RootConvergenceError instead of returning bad data.
    """
    if m.degree < 1:
        raise ValueError("need a polynomial of degree at least 1")
    coeffs = [float(c) for c in m.coeffs]
    lead = coeffs[-1]
    degree = m.degree
    radius = 1.0 + max(abs(c / lead) for c in coeffs[:-1]) if degree else 1.0

    def value(z: complex) -> complex:
        acc = 0j
        for c in reversed(coeffs):
            acc = acc * z + c
        return acc

    z = [
        radius * cmath.exp(2j * cmath.pi * (k / degree) + 0.4j) for k in range(degree)
    ]
    converged = False
    for _ in range(max_iter):
        shift = 0.0
        for k in range(degree):
            denom = lead
            for j in range(degree):
                if j != k:
                    denom *= z[k] - z[j]
            if denom == 0:
                denom = 1e-30
            delta = value(z[k]) / denom
            z[k] -= delta
            shift = max(shift, abs(delta))
        if shift < tol:
            converged = True
            break
    residuals = [abs(value(w)) for w in z]
    if not converged:
        raise RootConvergenceError(residuals)
    z = _conjugate_symmetrize(z)
    order = sorted(range(degree), key=lambda k: (-abs(z[k]), -z[k].real, z[k].imag))
    z = [z[k] for k in order]
    residuals = [abs(value(w)) for w in z]
    return Spectrum(eigenvalues=tuple(z), residuals=tuple(residuals))


@dataclass(frozen=True)
class IdempotentFamily:
    """Lagrange-built spectral projectors E_i plus measured invariant residuals.

    residuals keys: "mutual" (E_i E_j vs delta_ij E_i), "sum" (sum E_i vs I),
    "reconstruction" (B vs sum lambda_i E_i), "hermitian" (E_i vs E_i*).
    """

    projectors: tuple[np.ndarray, ...]
    residuals: dict[str, float]


def idempotents(
    b: RationalMatrix, spectrum: Spectrum, tol: float = ASSERTION_TOL
) -> IdempotentFamily:
    """E_i = prod_{j != i} (B - lambda_j I) / (lambda_i - lambda_j)."""
    values = spectrum.eigenvalues
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            if abs(values[i] - values[j]) < tol:
                raise SpectrumDegeneracyError(
                    f"eigenvalues {values[i]} and {values[j]} closer than {tol}"
                )
    bf = b.to_float().astype(complex)
    n = b.order
    eye = np.eye(n, dtype=complex)
    projectors = []
    for i, li in enumerate(values):
        e = eye.copy()
        for j, lj in enumerate(values):
            if j != i:
                e = e @ (bf - lj * eye) / (li - lj)
        projectors.append(e)
    mutual = 0.0
    for i, ei in enumerate(projectors):
        for j, ej in enumerate(projectors):
            target = ei if i == j else np.zeros_like(ei)
            mutual = max(mutual, np.max(np.abs(ei @ ej - target)))
    total = sum(projectors)
    residuals = {
        "mutual": float(mutual),
        "sum": float(np.max(np.abs(total - eye))),
        "reconstruction": float(
            np.max(np.abs(bf - sum(l * e for l, e in zip(values, projectors))))
        ),
        "hermitian": float(
            max(np.max(np.abs(e - e.conj().T)) for e in projectors)
        ),
    }
    return IdempotentFamily(projectors=tuple(projectors), residuals=residuals)


@dataclass(frozen=True)
class PerronReport:
    """Sanity report tying the numeric spectrum back to the rational lambda."""

    lam: float
    max_modulus: float
    modulus_matches: bool
    perron_simple: bool
    min_gap_to_perron: float
    allones_eigenvector_exact: bool

    @property
    def ok(self) -> bool:
        return self.modulus_matches and self.perron_simple and self.allones_eigenvector_exact


def perron_check(
    b: RationalMatrix,
    spectrum: Spectrum,
    tol: float = ASSERTION_TOL,
    classification: MatrixClassification | None = None,
) -> PerronReport:
    """Check lambda dominates the spectrum, is simple, and B 1 = lambda 1 exactly."""
    cls = classification if classification is not None else classify(b)
    if cls.lam is None:
        raise ValueError("perron check needs a lambda-doubly stochastic matrix")
    lam = cls.lam
    values = spectrum.eigenvalues
    max_modulus = max(abs(v) for v in values)
    gaps = [abs(v - complex(float(lam), 0.0)) for v in values]
    nearest = min(range(len(values)), key=lambda i: gaps[i])
    min_gap = min(
        (abs(values[nearest] - v) for i, v in enumerate(values) if i != nearest),
        default=float("inf"),
    )
    row_sums_ok = all(sum(row, start=0 * lam) == lam for row in b.rows)
    return PerronReport(
        lam=float(lam),
        max_modulus=max_modulus,
        modulus_matches=abs(max_modulus - float(lam)) < tol and gaps[nearest] < tol,
        perron_simple=min_gap > tol,
        min_gap_to_perron=min_gap,
        allones_eigenvector_exact=row_sums_ok,
    )
