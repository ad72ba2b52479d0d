import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spechtkit.combinatorics import Partition
from spechtkit.errors import CharacteristicTwoError, DomainMismatchError, SpechtError
from spechtkit.exact_algebra import int_det
from spechtkit.jantzen import (
    bilinear_form,
    check_core_identity,
    check_exception_identity,
    gram_matrix,
    image_orthogonal,
    in_jantzen_by_decomposition,
    is_right_justified,
    jantzen_filtration,
    shift_rows,
    verify_jantzen_containment,
)
from spechtkit.combinatorics import Tableau
from spechtkit.specht import act_permutation, polytabloid, standard_basis
from strategies import bijective_tableau_st, partition_st, permutation_st, shift_pair_st


@settings(max_examples=40, deadline=None)
@given(bijective_tableau_st(2, 6), st.data())
def test_form_is_invariant(t, data):
    perm = data.draw(permutation_st(t.n))
    s = t.permute_symbols(data.draw(permutation_st(t.n)))
    u, v = polytabloid(t), polytabloid(s)
    assert bilinear_form(act_permutation(u, perm), act_permutation(v, perm)) == bilinear_form(u, v)


def test_form_rejects_mixed_types():
    with pytest.raises(DomainMismatchError):
        bilinear_form(polytabloid(Tableau.parse("12/3")), polytabloid(Tableau.parse("123")))


@given(partition_st(1, 6))
def test_gram_symmetric_nonsingular(lam):
    G = gram_matrix(lam)
    A = G.as_array()
    assert np.array_equal(A, A.T)
    assert int_det(G.entries) != 0


@settings(max_examples=30, deadline=None)
@given(partition_st(2, 6), st.sampled_from([3, 5, 7]))
def test_filtration_is_decreasing(lam, p):
    J = jantzen_filtration(lam, p)
    dims = J.dimensions()
    assert dims[0] == standard_basis(lam).dim
    assert all(x >= y for x, y in zip(dims, dims[1:]))
    assert len(dims) == J.max_valuation + 1


def test_worked_filtration():
    J = jantzen_filtration(Partition((3, 3, 1)), 5)
    assert J.elementary_divisors == (2,) * 6 + (6, 6) + (30,) * 12 + (60,)
    assert J.dimensions() == [21, 13]
    with pytest.raises(SpechtError):
        jantzen_filtration(Partition((3, 3, 1)), 0)


@settings(max_examples=60, deadline=None)
@given(partition_st(2, 6), st.sampled_from([3, 5, 7]), st.data())
def test_gram_and_decomposition_agree(lam, p, data):
    J = jantzen_filtration(lam, p)
    d = J.gram.dim
    i = data.draw(st.integers(1, J.max_valuation + 1))
    ys = data.draw(st.lists(st.integers(-2, 2), min_size=d, max_size=d))
    coords = [sum(y * J.smith.U[k][j] for k, y in enumerate(ys)) for j in range(d)]
    if data.draw(st.booleans()):
        coords = [c * p for c in coords]
    assert J.contains_integral(coords, i) == in_jantzen_by_decomposition(lam, coords, p, i)


@settings(max_examples=40, deadline=None)
@given(shift_pair_st(2, 6))
def test_error_term_identities(pair):
    alpha, a, b, _ = pair
    assert check_core_identity(alpha, a, b)
    assert all(check_exception_identity(alpha, a, b))
    assert image_orthogonal(alpha, a, b)


def test_right_justified():
    assert is_right_justified(Tableau.parse("1211/22"), 1, 2)
    assert not is_right_justified(Tableau.parse("1112/22"), 1, 2)


def test_containment_example():
    res = verify_jantzen_containment(Partition((4, 3)), Partition((3, 3, 1)), 5)
    assert res.ok and not res.vacuous
    assert (res.a, res.b, res.h_a, res.i_guaranteed, res.i_observed) == (1, 3, 5, 1, 1)
    assert verify_jantzen_containment(Partition((4, 3)), Partition((3, 3, 1)), 3).vacuous
    with pytest.raises(CharacteristicTwoError):
        verify_jantzen_containment(Partition((4, 3)), Partition((3, 3, 1)), 2)


def test_shift_rows():
    assert shift_rows(Partition((4, 3)), Partition((3, 3, 1))) == (1, 3)
    with pytest.raises(SpechtError):
        shift_rows(Partition((3, 3, 1)), Partition((4, 3)))
