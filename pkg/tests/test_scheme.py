from fractions import Fraction

import pytest

from schemeforge.digraph import distance_structure, underlying_digraph
from schemeforge.exact import Polynomial
from schemeforge.matrix import (
    MatrixPowerBasis,
    RationalMatrix,
    algebra_membership,
    solve_rational_system,
)
from schemeforge.scheme import (
    RejectionCode,
    SchemeAxiomError,
    SchemeCertificate,
    class_distance_constancy,
    detect_scheme,
    intersection_numbers,
    transpose_map,
    vanishing_product_check,
)
from schemeforge.stochastic import random_lambda_ds, classify

from conftest import load_fixture
from oracles import verify_scheme_axioms

# frozen from a hand-checked run: tensor[i][j] lists p^h_{ij} for h = 0..3
FIG2_TENSOR = (
    ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    ((0, 1, 0, 0), (0, 0, 2, 0), (2, 0, 0, 2), (0, 1, 0, 0)),
    ((0, 0, 1, 0), (2, 0, 0, 2), (0, 2, 0, 0), (0, 0, 1, 0)),
    ((0, 0, 0, 1), (0, 1, 0, 0), (0, 0, 1, 0), (1, 0, 0, 0)),
)


def directed_cycle_matrix(n, scale=1):
    return RationalMatrix(
        [[scale if y == (x + 1) % n else 0 for y in range(n)] for x in range(n)]
    )


def circulant(n, offsets, weight):
    return RationalMatrix(
        [[weight if (y - x) % n in offsets else 0 for y in range(n)] for x in range(n)]
    )


def test_fig2_accepted(fig2):
    cert = detect_scheme(fig2)
    assert cert.accepted
    assert cert.d == 3 and cert.diameter == 3
    assert cert.transpose_perm == (0, 2, 1, 3)
    tensor_ints = tuple(
        tuple(tuple(int(v) for v in row) for row in plane)
        for plane in cert.intersection_tensor
    )
    assert tensor_ints == FIG2_TENSOR
    assert cert.generator_polynomials == (
        Polynomial([1]),
        Polynomial([-2, 4]),
        Polynomial([2, -8, 8]),
        Polynomial([-3, 12, -24, 16]),
    )
    assert cert.class_matrices == distance_structure(underlying_digraph(fig2)).classes


def test_fig1_rejected_not_normal(fig1):
    cert = detect_scheme(fig1)
    assert not cert.accepted
    assert cert.reason.code is RejectionCode.NOT_NORMAL


@pytest.mark.parametrize("n", range(3, 9))
def test_scaled_cycles_accepted_with_group_tensor(n):
    cert = detect_scheme(directed_cycle_matrix(n, scale=Fraction(3, 2)))
    assert cert.accepted
    assert cert.d == n - 1 and cert.diameter == n - 1
    for i in range(n):
        for j in range(n):
            for h in range(n):
                expected = 1 if (i + j) % n == h else 0
                assert cert.intersection_tensor[i][j][h] == expected
    assert cert.transpose_perm == tuple((-i) % n for i in range(n))


def test_one_by_one_positive_matrix_is_degenerate_scheme():
    cert = detect_scheme(RationalMatrix([[Fraction(2, 3)]]))
    assert cert.accepted
    assert cert.d == 0 and cert.diameter == 0
    assert cert.intersection_tensor == (((Fraction(1),),),)


def test_rejection_not_nonnegative():
    cert = detect_scheme(RationalMatrix([[0, -1], [-1, 0]]))
    assert cert.reason.code is RejectionCode.NOT_NONNEGATIVE


def test_rejection_not_irreducible():
    cert = detect_scheme(RationalMatrix.identity(3))
    assert cert.reason.code is RejectionCode.NOT_IRREDUCIBLE


def test_rejection_not_doubly_stochastic(fig2):
    grid = [list(row) for row in fig2.rows]
    grid[0][1] = Fraction(1, 3)  # keeps nonnegativity and irreducibility
    cert = detect_scheme(RationalMatrix(grid))
    assert cert.reason.code is RejectionCode.NOT_DOUBLY_STOCHASTIC


def test_rejection_lambda_zero():
    cert = detect_scheme(RationalMatrix([[0]]))
    assert cert.reason.code is RejectionCode.LAMBDA_ZERO


def test_rejection_eigencount_ne_diameter():
    # undirected circulant on Z_7 with connections {1,2}: diameter 2 but 4
    # distinct eigenvalues
    b = circulant(7, (1, 2, 5, 6), Fraction(1, 4))
    cert = detect_scheme(b)
    assert cert.reason.code is RejectionCode.EIGENCOUNT_NE_DIAMETER
    assert cert.reason.d == 3 and cert.reason.diameter == 2
    assert cert.d == 3 and cert.diameter == 2
    assert "EIGENCOUNT_NE_DIAMETER(d=3, D=2)" == cert.reason.describe()


def test_rejection_ad_not_polynomial():
    # circulant digraph on Z_8 with connections {1,4,5}: normal, lambda-DS,
    # d = D = 3, but the distance-3 matrix is outside the polynomial algebra
    b = circulant(8, (1, 4, 5), Fraction(1, 3))
    cert = detect_scheme(b)
    assert cert.reason.code is RejectionCode.AD_NOT_POLYNOMIAL
    assert cert.reason.d == 3 and cert.reason.diameter == 3
    assert cert.d == 3 and cert.diameter == 3
    # the general membership solver agrees with the single-equality test
    structure = distance_structure(underlying_digraph(b))
    basis = MatrixPowerBasis(b)
    assert algebra_membership(structure.classes[3], basis, degree=3) is None


def test_rejection_monotonicity_under_entry_perturbation(fig2):
    base = detect_scheme(fig2)
    assert base.accepted
    grid = [list(row) for row in fig2.rows]
    grid[2][3] += Fraction(1, 8)
    cert = detect_scheme(RationalMatrix(grid))
    assert not cert.accepted


def test_intersection_numbers_trivial_scheme():
    n = 6
    eye = RationalMatrix.identity(n)
    rest = RationalMatrix.ones(n) - eye
    tensor = intersection_numbers([eye, rest])
    assert tensor[1][1][0] == n - 1
    assert tensor[1][1][1] == n - 2


def test_intersection_numbers_cyclic_three():
    classes = [
        RationalMatrix.identity(3),
        directed_cycle_matrix(3),
        directed_cycle_matrix(3) @ directed_cycle_matrix(3),
    ]
    tensor = intersection_numbers(classes)
    for i in range(3):
        for j in range(3):
            for h in range(3):
                assert tensor[i][j][h] == (1 if (i + j) % 3 == h else 0)


def test_intersection_numbers_fig2_brute_force(fig2):
    classes = distance_structure(underlying_digraph(fig2)).classes
    tensor = intersection_numbers(classes)
    for i in range(4):
        for j in range(4):
            product = classes[i] @ classes[j]
            recombined = RationalMatrix.zeros(6)
            for h in range(4):
                recombined = recombined + tensor[i][j][h] * classes[h]
            assert recombined == product


def test_intersection_numbers_flag_non_constant_products():
    # arcs of a directed path do not close into a coherent partition
    eye = RationalMatrix.identity(3)
    arc = RationalMatrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    rest = RationalMatrix.ones(3) - eye - arc
    with pytest.raises(SchemeAxiomError) as excinfo:
        intersection_numbers([eye, arc, rest])
    assert excinfo.value.axiom == "AS4"


def test_transpose_map_symmetric_scheme():
    eye = RationalMatrix.identity(5)
    rest = RationalMatrix.ones(5) - eye
    assert transpose_map([eye, rest]) == (0, 1)


def test_transpose_map_cyclic_three():
    c = directed_cycle_matrix(3)
    assert transpose_map([RationalMatrix.identity(3), c, c @ c]) == (0, 2, 1)


def test_transpose_map_fig2(fig2):
    classes = distance_structure(underlying_digraph(fig2)).classes
    assert transpose_map(classes) == (0, 2, 1, 3)


def test_transpose_map_reports_missing_transpose():
    eye = RationalMatrix.identity(3)
    single_arc = RationalMatrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    rest = RationalMatrix.ones(3) - eye - single_arc
    with pytest.raises(SchemeAxiomError) as excinfo:
        transpose_map([eye, single_arc, rest])
    assert excinfo.value.axiom == "AS3"


def test_vanishing_product_check_fig2(fig2):
    structure = distance_structure(underlying_digraph(fig2))
    assert vanishing_product_check(fig2, structure)


@pytest.mark.parametrize("n", (5, 6, 7))
def test_vanishing_product_check_cycles(n):
    b = directed_cycle_matrix(n, scale=Fraction(3, 2))
    structure = distance_structure(underlying_digraph(b))
    assert vanishing_product_check(b, structure)


def test_vanishing_product_check_vacuous_small_diameter():
    b = Fraction(1, 4) * RationalMatrix.ones(4)
    structure = distance_structure(underlying_digraph(b))
    assert structure.diameter <= 2
    assert vanishing_product_check(b, structure)


def test_class_distance_constancy_accepted_certificates(fig2):
    for b in (fig2, directed_cycle_matrix(5, scale=Fraction(3, 2))):
        structure = distance_structure(underlying_digraph(b))
        cert = detect_scheme(b)
        assert class_distance_constancy(cert, structure)


def test_class_distance_constancy_detects_mixed_partition():
    c = directed_cycle_matrix(4)
    structure = distance_structure(underlying_digraph(c))
    mixed = SchemeCertificate(
        accepted=True,
        reason=None,
        class_matrices=(
            RationalMatrix.identity(4),
            c + c @ c,  # mixes distances 1 and 2
            c @ c @ c,
        ),
    )
    assert not class_distance_constancy(mixed, structure)


def test_accepted_certificates_pass_brute_force_axioms(fig2):
    candidates = [
        fig2,
        directed_cycle_matrix(5, scale=Fraction(3, 2)),
        load_fixture("complete_4.mat"),
        Fraction(1, 6) * RationalMatrix.ones(6),
    ]
    for b in candidates:
        cert = detect_scheme(b)
        assert cert.accepted
        assert verify_scheme_axioms(list(cert.class_matrices)) is None


def test_accepted_span_equals_power_span(fig2):
    cert = detect_scheme(fig2)
    basis = MatrixPowerBasis(fig2)
    # each class is a polynomial in B ...
    for a in cert.class_matrices:
        assert algebra_membership(a, basis, degree=cert.d) is not None
    # ... and each power lies in the span of the classes
    class_vectors = [a.flatten() for a in cert.class_matrices]
    for k in range(cert.d + 1):
        assert solve_rational_system(class_vectors, basis.vector(k)) is not None


@pytest.mark.parametrize(
    "theta0,theta1", [(Fraction(1, 3), Fraction(1, 6)), (Fraction(2), Fraction(5, 4))]
)
def test_recombinations_of_scheme_classes_are_accepted(fig2, theta0, theta1):
    cert = detect_scheme(fig2)
    recombined = theta0 * cert.class_matrices[0] + theta1 * cert.class_matrices[1]
    again = detect_scheme(recombined)
    assert again.accepted
    assert again.class_matrices == cert.class_matrices


def test_recombinations_of_cyclic_classes_are_accepted():
    base = detect_scheme(directed_cycle_matrix(5))
    recombined = Fraction(1, 2) * base.class_matrices[0] + Fraction(7, 3) * base.class_matrices[1]
    cert = detect_scheme(recombined)
    assert cert.accepted
    assert cert.class_matrices == base.class_matrices


def test_random_accepted_instances_pass_brute_force():
    found = 0
    seed = 0
    while found < 3 and seed < 400:
        b = random_lambda_ds(4 + seed % 5, 1 + seed % 3, seed=seed)
        seed += 1
        if not classify(b).irreducible:
            continue
        cert = detect_scheme(b)
        if cert.accepted:
            found += 1
            assert verify_scheme_axioms(list(cert.class_matrices)) is None
    assert found == 3
