from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grasshodge.partitions import box_counts
from grasshodge.twisted import euler_char_twisted, grassmannian_diamond, twisted_form_cohomology


def bott_top(n, j, i):
    """h^n(P^n, Omega^j(-i)) for i > 0, dual to h^0(Omega^{n-j}(i))."""
    p = n - j
    return comb(i + n - p, i) * comb(i - 1, p) if i > p else 0


@pytest.mark.parametrize("n", [2, 3, 5, 9])
def test_bott_formula_on_projective_space(n):
    for j in range(n + 1):
        assert twisted_form_cohomology(1, n + 1, j, 0) == {j: 1}
        for i in range(1, n + 4):
            top = bott_top(n, j, i)
            assert twisted_form_cohomology(1, n + 1, j, i) == ({n: top} if top else {})


@pytest.mark.parametrize("k,n", [(2, 5), (3, 7), (3, 10)])
def test_untwisted_forms_give_hodge_numbers(k, n):
    counts = box_counts(k, n - k)
    for j in range(k * (n - k) + 1):
        assert twisted_form_cohomology(k, n, j, 0) == {j: counts[j]}


@given(st.sampled_from([(2, 5), (2, 6), (3, 6), (3, 7)]), st.data())
def test_nakano_vanishing(kn, data):
    k, n = kn
    d = k * (n - k)
    j = data.draw(st.integers(0, d))
    i = data.draw(st.integers(1, n + 2))
    table = twisted_form_cohomology(k, n, j, i)
    assert all(q + j >= d for q in table)


def test_twist_by_index_is_canonical():
    # Omega^d(-0) = K and Omega^0(-n) = K on Gr(k, n)
    assert twisted_form_cohomology(2, 6, 0, 6) == {8: 1}
    assert euler_char_twisted(2, 6, 8, 0) == 1


def test_grassmannian_diamond():
    g = grassmannian_diamond(3, 10)
    assert g.total() == 120
    assert g.dim == 21
    assert g.is_pure()


def test_range_checks():
    with pytest.raises(ValueError):
        twisted_form_cohomology(2, 5, 7, 1)
    with pytest.raises(ValueError):
        twisted_form_cohomology(2, 5, 1, -1)
    with pytest.raises(ValueError):
        grassmannian_diamond(5, 5)
