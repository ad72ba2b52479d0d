import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spechtkit.combinatorics import Partition, Tableau, num_standard_tableaux
from spechtkit.errors import DegreeTooLargeError, NotInSpanError, SpechtError
from spechtkit.exact_algebra import vec_equal, vec_sum
from spechtkit.specht import (
    TabloidModule,
    TranspositionSum,
    act_jm,
    act_permutation,
    check_degree,
    compose,
    delete_largest,
    generators,
    insert_largest,
    inverse_perm,
    murphy_closed_form,
    perm_sign,
    polytabloid,
    representation_matrix,
    specht_series_restriction,
    standard_basis,
    transposition,
    transposition_sum_matrix,
)
from strategies import bijective_tableau_st, partition_st, permutation_st, standard_tableau_st


def poly_sum(terms):
    return vec_sum((polytabloid(Tableau.parse(s)), c) for s, c in terms)


def test_permutation_basics():
    s = transposition(1, 2, 3)
    c = (2, 3, 1)
    assert compose(s, inverse_perm(s)) == (1, 2, 3)
    assert perm_sign(s) == -1 and perm_sign(c) == 1
    assert generators(3) == [(2, 1, 3), (2, 3, 1)]


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5).flatmap(lambda n: st.tuples(permutation_st(n), permutation_st(n), st.just(n))), st.data())
def test_action_is_a_right_action(pair, data):
    s, t, n = pair
    lam = data.draw(partition_st(n, n))
    M = TabloidModule(lam.parts)
    v = {M.basis[k]: k + 1 for k in range(min(3, M.dim))}
    assert act_permutation(act_permutation(v, s), t) == act_permutation(v, compose(s, t))


@settings(max_examples=40, deadline=None)
@given(bijective_tableau_st(2, 6), st.data())
def test_polytabloids_are_permuted(t, data):
    perm = data.draw(permutation_st(t.n))
    assert act_permutation(polytabloid(t), perm) == polytabloid(t.permute_symbols(perm))


def test_degree_mismatch():
    with pytest.raises(SpechtError):
        act_permutation(polytabloid(Tableau.parse("12/3")), (1, 2, 3, 4))
    with pytest.raises(SpechtError):
        act_jm(polytabloid(Tableau.parse("12/3")), TranspositionSum.jucys_murphy(4))


def test_transposition_sum_on_trivial_module():
    v = {((1,),): 1}
    assert act_jm(v, TranspositionSum(1, 0)) == {}


@given(partition_st(1, 7))
def test_standard_basis_dimension(lam):
    assert standard_basis(lam).dim == num_standard_tableaux(lam)


def test_polytabloid_straightening_identity():
    lhs = polytabloid(Tableau.parse("321/465/7"))
    rhs = poly_sum([("123/564/7", 1), ("124/567/3", 1), ("123/567/4", -1)])
    assert vec_equal(lhs, rhs)
    B = standard_basis(Partition((3, 3, 1)))
    assert B.expand(lhs) == B.expand(rhs)


@settings(max_examples=40, deadline=None)
@given(standard_tableau_st(1, 6), st.data())
def test_expand_recovers_coefficients(t, data):
    B = standard_basis(Partition(t.shape))
    coeffs = data.draw(st.lists(st.integers(-3, 3), min_size=B.dim, max_size=B.dim))
    v = B.combine(coeffs)
    assert list(B.expand(v)) == coeffs
    assert list(B.expand(B.vectors[B.index_of(t)])) == [int(k == B.index_of(t)) for k in range(B.dim)]


def test_expand_rejects_outside_vector():
    B = standard_basis(Partition((2, 1)))
    with pytest.raises(NotInSpanError):
        B.expand({((1, 2), (3,)): 1})


@settings(max_examples=20, deadline=None)
@given(standard_tableau_st(2, 8))
def test_murphy_closed_form(t):
    assert vec_equal(murphy_closed_form(t), act_jm(polytabloid(t), TranspositionSum.jucys_murphy(t.n)))


@settings(max_examples=20, deadline=None)
@given(partition_st(2, 5), st.data())
def test_representation_is_a_homomorphism(lam, data):
    n = lam.n
    s, t = data.draw(permutation_st(n)), data.draw(permutation_st(n))
    A, B = representation_matrix(lam, s), representation_matrix(lam, t)
    assert np.array_equal(A.dot(B), representation_matrix(lam, compose(s, t)))


def test_class_sum_is_scalar():
    # the class sum of transpositions acts on S^lambda by the content sum
    lam = Partition((3, 2))
    M = transposition_sum_matrix(lam, TranspositionSum(5, 0))
    assert np.array_equal(M, 2 * np.eye(standard_basis(lam).dim, dtype=object))


def test_specht_series_example():
    layers = specht_series_restriction(Partition((4, 3, 1)))
    assert [L.quotient.parts for L in layers] == [(3, 3, 1), (4, 2, 1), (4, 3)]
    assert [L.content for L in layers] == [3, 1, -2]
    assert [L.residue(5) for L in layers] == [3, 1, 3]
    assert sum(len(L.members) for L in layers) == standard_basis(Partition((4, 3, 1))).dim


def test_insert_and_delete_largest():
    t = Tableau.parse("1234/567")
    layers = specht_series_restriction(Partition((4, 3, 1)))
    s = insert_largest(t, layers[2].node)
    assert s == Tableau.parse("1234/567/8")
    assert delete_largest(s) == t


def test_degree_guard(monkeypatch):
    check_degree(12)
    with pytest.raises(DegreeTooLargeError):
        check_degree(13)
    check_degree(13, force=True)
    monkeypatch.setenv("SPECHT_MAX_N", "5")
    with pytest.raises(DegreeTooLargeError):
        check_degree(6)
