from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from schemeforge.digraph import is_strongly_connected, underlying_digraph
from schemeforge.matrix import RationalMatrix
from schemeforge.stochastic import classify, entry_decomposition, random_lambda_ds


def test_classify_fig1(fig1):
    cls = classify(fig1)
    assert cls.nonnegative
    assert cls.lam == 1
    assert cls.irreducible
    assert not cls.normal
    assert cls.hoffman_ready


def test_classify_fig2(fig2):
    cls = classify(fig2)
    assert cls.nonnegative and cls.normal and cls.irreducible
    assert cls.lam == 1


def test_classify_swap_permutation():
    cls = classify(RationalMatrix([[0, 1], [1, 0]]))
    assert cls.lam == 1 and cls.normal and cls.irreducible


def test_classify_negative_matrix():
    cls = classify(RationalMatrix([[0, -1], [-1, 0]]))
    assert not cls.nonnegative
    assert cls.lam is None
    assert not cls.doubly_stochastic


def test_classify_unequal_line_sums():
    cls = classify(RationalMatrix([[1, 0], [1, 1]]))
    assert cls.nonnegative and cls.lam is None


def test_classify_zero_one_by_one():
    cls = classify(RationalMatrix([[0]]))
    assert cls.lam == 0 and cls.irreducible
    assert not cls.hoffman_ready


def test_irreducibility_matches_digraph_connectivity(fig1, fig2):
    for b in (fig1, fig2, RationalMatrix.identity(3), RationalMatrix.ones(4)):
        assert classify(b).irreducible == is_strongly_connected(underlying_digraph(b))


def test_entry_decomposition_fig2(fig2):
    decomposition = entry_decomposition(fig2)
    assert decomposition.coefficients == (Fraction(1, 4), Fraction(1, 2))
    assert decomposition.indicators[1] == RationalMatrix.identity(6)
    off_diagonal_support = sum(
        1 for row in decomposition.indicators[0].rows for v in row if v
    )
    assert off_diagonal_support == 12
    assert decomposition.reconstruct(6) == fig2


def test_entry_decomposition_allones():
    j = RationalMatrix.ones(3)
    decomposition = entry_decomposition(j)
    assert decomposition.coefficients == (Fraction(1),)
    assert decomposition.indicators == (j,)


def test_entry_decomposition_fig1(fig1):
    decomposition = entry_decomposition(fig1)
    assert decomposition.coefficients == (Fraction(1, 3), Fraction(2, 3), Fraction(1))
    support_sizes = [
        sum(1 for row in f.rows for v in row if v) for f in decomposition.indicators
    ]
    # 16 nonzero positions split over the three values
    assert support_sizes == [10, 4, 2]
    assert decomposition.reconstruct(8) == fig1


def test_entry_decomposition_rejects_negative():
    with pytest.raises(ValueError):
        entry_decomposition(RationalMatrix([[1, -1], [0, 1]]))


@given(
    st.integers(min_value=1, max_value=4).flatmap(
        lambda n: st.lists(
            st.lists(
                st.fractions(min_value=Fraction(0), max_value=Fraction(5), max_denominator=6),
                min_size=n,
                max_size=n,
            ),
            min_size=n,
            max_size=n,
        )
    )
)
@settings(max_examples=50, deadline=None)
def test_entry_decomposition_reconstructs(grid):
    b = RationalMatrix(grid)
    decomposition = entry_decomposition(b)
    assert decomposition.reconstruct(b.order) == b
    assert list(decomposition.coefficients) == sorted(set(decomposition.coefficients))
    assert all(c > 0 for c in decomposition.coefficients)
    for i, fi in enumerate(decomposition.indicators):
        for j in range(i + 1, len(decomposition.indicators)):
            fj = decomposition.indicators[j]
            assert all(
                a * b_ == 0 for ra, rb in zip(fi.rows, fj.rows) for a, b_ in zip(ra, rb)
            )


def test_random_generator_one_by_one():
    b = random_lambda_ds(1, 1, seed=3)
    assert b.order == 1
    assert b[0][0] > 0


@pytest.mark.parametrize("seed", range(8))
def test_random_generator_outputs_are_lambda_ds(seed):
    b = random_lambda_ds(5, 3, seed=seed)
    cls = classify(b)
    assert cls.nonnegative
    assert cls.lam is not None and cls.lam > 0


def test_random_generator_single_term_is_scaled_permutation():
    b = random_lambda_ds(6, 1, seed=11)
    values = {v for row in b.rows for v in row if v != 0}
    assert len(values) == 1
    assert all(sum(1 for v in row if v) == 1 for row in b.rows)
    assert classify(b).normal


def test_random_generator_deterministic_under_seed():
    assert random_lambda_ds(7, 4, seed=42) == random_lambda_ds(7, 4, seed=42)
    assert random_lambda_ds(7, 4, seed=42) != random_lambda_ds(7, 4, seed=43)


def test_random_generator_rejects_bad_arguments():
    with pytest.raises(ValueError):
        random_lambda_ds(0, 1, seed=0)
    with pytest.raises(ValueError):
        random_lambda_ds(3, 0, seed=0)
