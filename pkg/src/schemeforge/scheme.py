"""Association-scheme detection for normal lambda-doubly stochastic matrices.

detect_scheme runs the full decision pipeline: classification gates, the
distance structure of the underlying digraph, the eigenvalue-count vs
diameter comparison, the predistance basis, and the single matrix equality
A_D = p_D(B) that settles whether the distance-D matrix is a polynomial in
B. An accepted certificate carries the standard basis, the intersection
tensor, and the transpose permutation; a rejection carries a typed reason.

Rejection is a value, never an exception. The AXIOM_FAILURE reason exists
only as a self-check trap: when the acceptance hypotheses hold it is
unreachable, and any occurrence is loudly logged as a potential gap.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .digraph import DistanceStructure, distance_structure, underlying_digraph
from .exact import Polynomial
from .matrix import MatrixPowerBasis, RationalMatrix
from .hoffman import minimal_polynomial
from .predistance import predistance_basis
from .stochastic import classify

logger = logging.getLogger(__name__)

IntersectionTensor = tuple[tuple[tuple[Fraction, ...], ...], ...]


class SchemeAxiomError(Exception):
    """A standard-basis axiom check failed on the given witness indices."""

    def __init__(self, axiom: str, witness: tuple):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"axiom {axiom} failed at {witness}")


class RejectionCode(enum.Enum):
    NOT_NONNEGATIVE = "NOT_NONNEGATIVE"
    NOT_IRREDUCIBLE = "NOT_IRREDUCIBLE"
    NOT_DOUBLY_STOCHASTIC = "NOT_DOUBLY_STOCHASTIC"
    NOT_NORMAL = "NOT_NORMAL"
    LAMBDA_ZERO = "LAMBDA_ZERO"
    EIGENCOUNT_NE_DIAMETER = "EIGENCOUNT_NE_DIAMETER"
    AD_NOT_POLYNOMIAL = "AD_NOT_POLYNOMIAL"
    AXIOM_FAILURE = "AXIOM_FAILURE"


@dataclass(frozen=True)
class Rejection:
    code: RejectionCode
    d: Optional[int] = None
    diameter: Optional[int] = None
    axiom: Optional[str] = None
    witness: Optional[tuple] = None

    def describe(self) -> str:
        if self.code is RejectionCode.EIGENCOUNT_NE_DIAMETER:
            return f"EIGENCOUNT_NE_DIAMETER(d={self.d}, D={self.diameter})"
        if self.code is RejectionCode.AXIOM_FAILURE:
            return f"AXIOM_FAILURE({self.axiom}, witness={self.witness})"
        return self.code.value


@dataclass(frozen=True)
class SchemeCertificate:
    """Verdict of detect_scheme plus, when accepted, the scheme data.

    class_matrices are the distance matrices A_0..A_D (each equal to
    p_i(B)); intersection_tensor is indexed [i][j][h] with
    A_i A_j = sum_h tensor[i][j][h] A_h; transpose_perm maps i to the index
    of A_i^T.
    """

    accepted: bool
    reason: Optional[Rejection]
    d: Optional[int] = None
    diameter: Optional[int] = None
    class_matrices: Optional[tuple[RationalMatrix, ...]] = None
    intersection_tensor: Optional[IntersectionTensor] = None
    transpose_perm: Optional[tuple[int, ...]] = None
    generator_polynomials: Optional[tuple[Polynomial, ...]] = None


def intersection_numbers(class_matrices: Sequence[RationalMatrix]) -> IntersectionTensor:
    """Structure constants of the class matrices, verified exactly.

    Each A_i A_j must be constant on the support of every A_h; the constant
    is read off one entry and asserted across the whole support, then the
    expansion identity A_i A_j = sum_h p^h_ij A_h is rechecked entry-wise.
    """
    r = len(class_matrices)
    n = class_matrices[0].order
    supports: list[list[tuple[int, int]]] = []
    for a in class_matrices:
        support = [(x, y) for x in range(n) for y in range(n) if a.rows[x][y] != 0]
        if not support:
            raise ValueError("class matrix with empty support")
        supports.append(support)
    tensor: list[tuple[tuple[Fraction, ...], ...]] = []
    for i in range(r):
        tensor_i: list[tuple[Fraction, ...]] = []
        for j in range(r):
            product = class_matrices[i] @ class_matrices[j]
            row: list[Fraction] = []
            for h in range(r):
                first_x, first_y = supports[h][0]
                value = product.rows[first_x][first_y]
                for x, y in supports[h]:
                    if product.rows[x][y] != value:
                        raise SchemeAxiomError("AS4", (i, j, h, x, y))
                row.append(value)
            reconstructed = RationalMatrix(
                [
                    [
                        sum(
                            (row[h] * class_matrices[h].rows[x][y] for h in range(r)),
                            Fraction(0),
                        )
                        for y in range(n)
                    ]
                    for x in range(n)
                ]
            )
            if reconstructed != product:
                raise SchemeAxiomError("AS4", (i, j))
            tensor_i.append(tuple(row))
        tensor.append(tuple(tensor_i))
    return tuple(tensor)


def transpose_map(class_matrices: Sequence[RationalMatrix]) -> tuple[int, ...]:
    """For each i, the unique index i' with A_i^T = A_i'."""
    perm: list[int] = []
    for i, a in enumerate(class_matrices):
        at = a.transpose()
        matches = [j for j, c in enumerate(class_matrices) if c == at]
        if len(matches) != 1:
            raise SchemeAxiomError("AS3", (i,))
        perm.append(matches[0])
    return tuple(perm)


def detect_scheme(b: RationalMatrix) -> SchemeCertificate:
    """Decide whether the polynomial algebra of B is a Bose-Mesner algebra.

    Acceptance requires B normal, lambda-doubly stochastic (lambda != 0),
    irreducible, with eigenvalue count D + 1 matching the diameter D of the
    underlying digraph, and the distance-D matrix equal to p_D(B). Every
    accepted certificate is built from re-verified axiom checks.
    """

    def rejected(code: RejectionCode, **details) -> SchemeCertificate:
        return SchemeCertificate(
            accepted=False,
            reason=Rejection(code, **details),
            d=details.get("d"),
            diameter=details.get("diameter"),
        )

    cls = classify(b)
    if not cls.nonnegative:
        return rejected(RejectionCode.NOT_NONNEGATIVE)
    if not cls.irreducible:
        return rejected(RejectionCode.NOT_IRREDUCIBLE)
    if cls.lam is None:
        return rejected(RejectionCode.NOT_DOUBLY_STOCHASTIC)
    if not cls.normal:
        return rejected(RejectionCode.NOT_NORMAL)
    if cls.lam == 0:
        return rejected(RejectionCode.LAMBDA_ZERO)

    structure = distance_structure(underlying_digraph(b))
    basis = MatrixPowerBasis(b)
    minimal = minimal_polynomial(b, basis)
    d = minimal.degree - 1
    if d != structure.diameter:
        return rejected(RejectionCode.EIGENCOUNT_NE_DIAMETER, d=d, diameter=structure.diameter)

    family = predistance_basis(b, classification=cls, basis=basis, minimal=minimal)
    if structure.classes[d] != family.evaluations[d]:
        return rejected(RejectionCode.AD_NOT_POLYNOMIAL, d=d, diameter=structure.diameter)

    def axiom_failure(axiom: str, witness: tuple) -> SchemeCertificate:
        logger.warning(
            "axiom self-check %s failed at %s although acceptance hypotheses hold; "
            "this should be unreachable",
            axiom,
            witness,
        )
        return rejected(
            RejectionCode.AXIOM_FAILURE,
            d=d,
            diameter=structure.diameter,
            axiom=axiom,
            witness=witness,
        )

    # guaranteed once A_D = p_D(B), but re-verified class by class
    for i in range(d + 1):
        if structure.classes[i] != family.evaluations[i]:
            return axiom_failure("CLASS_POLYNOMIALITY", (i,))

    classes = structure.classes
    n = b.order
    if classes[0] != RationalMatrix.identity(n):
        return axiom_failure("AS1", ())
    total = RationalMatrix.zeros(n)
    for a in classes:
        total = total + a
    if total != RationalMatrix.ones(n):
        return axiom_failure("AS2", ())
    try:
        perm = transpose_map(classes)
        tensor = intersection_numbers(classes)
    except SchemeAxiomError as exc:
        return axiom_failure(exc.axiom, exc.witness)
    for i in range(d + 1):
        for j in range(d + 1):
            for h in range(d + 1):
                value = tensor[i][j][h]
                if value.denominator != 1 or value < 0:
                    return axiom_failure("AS4", (i, j, h))
                if value != tensor[j][i][h]:
                    return axiom_failure("AS5", (i, j, h))

    return SchemeCertificate(
        accepted=True,
        reason=None,
        d=d,
        diameter=structure.diameter,
        class_matrices=classes,
        intersection_tensor=tensor,
        transpose_perm=perm,
        generator_polynomials=family.polys,
    )


def vanishing_product_check(b: RationalMatrix, structure: DistanceStructure) -> bool:
    """Structural check: (A_{D-j} B^T)_{xy} = 0 whenever dist(x, y) < D-j-1.

    Runs over every applicable j (those with D - j - 1 >= 2) and is
    vacuously true for diameters below 3. Independent of the scheme
    pipeline.
    """
    n = b.order
    diameter = structure.diameter
    bt = b.transpose()
    for j in range(diameter - 2):
        product = structure.classes[diameter - j] @ bt
        threshold = diameter - j - 1
        for x in range(n):
            for y in range(n):
                if structure.dist[x][y] < threshold and product.rows[x][y] != 0:
                    return False
    return True


def class_distance_constancy(
    certificate: SchemeCertificate, structure: DistanceStructure
) -> bool:
    """Whether each class support lies at a single digraph distance."""
    if not certificate.class_matrices:
        raise ValueError("certificate carries no class matrices")
    n = structure.classes[0].order
    for a in certificate.class_matrices:
        seen: set[int] = set()
        for x in range(n):
            for y in range(n):
                if a.rows[x][y] != 0:
                    seen.add(structure.dist[x][y])
        if len(seen) > 1:
            return False
    return True
