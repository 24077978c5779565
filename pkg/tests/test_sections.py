from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grasshodge.hodge import HodgePolynomial
from grasshodge.sections import (
    cy_levels,
    cy_type,
    hochschild_cy3_check,
    lefschetz_rows,
    linear_section_diamond,
    section_diamond,
    tangent_h1,
    vanishing_part,
)


@pytest.mark.parametrize("n", [3, 5, 8])
def test_hyperplane_in_projective_space_is_projective_space(n):
    assert section_diamond(1, n + 1) == HodgePolynomial.projective_space(n - 1)


def test_quadric_threefold():
    # Gr(2,4) is a quadric fourfold; its hyperplane section is a quadric threefold
    assert section_diamond(2, 4) == HodgePolynomial.projective_space(3)


def test_section_of_gr25():
    y = section_diamond(2, 5)
    assert [y[(p, p)] for p in range(6)] == [1, 1, 2, 2, 1, 1]
    assert y.total() == 8


def test_linear_sections_of_p_are_projective():
    assert linear_section_diamond(1, 8, 3) == HodgePolynomial.projective_space(4)


def test_y_diamond():
    y = section_diamond(3, 10)
    assert y.dim == 20
    assert lefschetz_rows(y)[20] == [1, 30, 1]
    assert [y[(p, p)] for p in range(10)] == [1, 1, 2, 3, 4, 5, 7, 8, 9, 10]
    assert y.euler() == 132


def test_vanishing_part_of_y():
    van = vanishing_part(3, 10)
    assert van[(11, 9)] == van[(9, 11)] == 1
    assert van[(10, 10)] == 20
    assert van.total() == 22


@pytest.mark.parametrize("k,n", [(3, 10), (3, 11), (3, 13)])
def test_extreme_middle_hodge_numbers(k, n):
    y = section_diamond(k, n)
    d = y.dim
    assert all(y[(q, d - q)] == 0 for q in range(n - 1))
    assert y[(n - 1, d - n + 1)] == 1
    # on the middle diagonal only the vanishing part counts moduli
    van = vanishing_part(k, n)
    assert van[(n, d - n)] == comb(n, k) - n * n


def test_gr311_section():
    y = section_diamond(3, 11)
    assert lefschetz_rows(y)[23] == [1, 44, 44, 1]
    check = hochschild_cy3_check()
    assert (check.chi, check.hh0, check.geometric_cy3_possible) == (62, 2, False)


def test_gr39_section():
    y = section_diamond(3, 9)
    assert y[(8, 9)] == y[(9, 8)] == 2
    assert y.euler() == 72


def test_two_hyperplanes_in_gr28():
    x = linear_section_diamond(2, 8, 2)
    assert x.dim == 10
    assert x.euler() == 24
    assert x[(5, 5)] == 6


@given(st.sampled_from([(2, 5), (2, 6), (2, 7), (3, 6), (3, 7), (2, 8)]), st.integers(1, 4))
def test_sections_are_valid_diamonds(kn, r):
    k, n = kn
    x = linear_section_diamond(k, n, r)
    assert x.check_diamond(k * (n - k) - r) == x
    assert x.is_nonnegative()


def test_cy_type():
    y = section_diamond(3, 10)
    assert cy_type(y, 20, 2)
    assert not cy_type(y, 20, 4)
    assert (20, 2) in cy_levels(y)
    y11 = section_diamond(3, 11)
    assert cy_type(y11, 23, 3)
    with pytest.raises(ValueError):
        cy_type(y, 20, 3)


def test_tangent_h1_chain():
    assert [tangent_h1(r) for r in (0, 1, 2)] == [20, 29, 28]
    with pytest.raises(ValueError):
        tangent_h1(3)
