import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spechtkit.combinatorics import Partition, Tableau, enumerate_semistandard_one_box, partitions, row_reading_tableau
from spechtkit.errors import CharacteristicTwoError, InvalidTableauError, ResidueConditionError, SpechtError
from spechtkit.homomorphisms import (
    PsiMap,
    admissible_psi,
    carter_payne_explicit,
    carter_payne_jm,
    compose_cp_chain,
    endo_ring_induction,
    endo_ring_restriction,
    hom_space,
    hook,
    jm_layers_for_shift,
    proportionality_scalar,
    psi,
    specht_membership,
    theta_T,
)
from spechtkit.specht import TabloidModule, polytabloid, standard_basis
from strategies import bijective_tableau_st, partition_st, shift_pair_st


@settings(max_examples=30, deadline=None)
@given(bijective_tableau_st(2, 6))
def test_psi_kills_polytabloids(t):
    e = polytabloid(t)
    for i, r in admissible_psi(t.shape):
        assert psi(e, i, r, t.shape) == {}


def test_psi_map_shapes():
    m = PsiMap(1, 2, (3, 3, 1))
    assert m.target == (4, 2, 1)
    v = {((1, 2, 3), (4, 5, 6), (7,)): 1}
    assert sum(m(v).values()) == 3


@settings(max_examples=60, deadline=None)
@given(partition_st(2, 5), st.sampled_from([0, 3, 5]), st.data())
def test_membership_methods_agree(lam, p, data):
    M = TabloidModule(lam.parts)
    B = standard_basis(lam)
    v = B.combine(data.draw(st.lists(st.integers(-2, 2), min_size=B.dim, max_size=B.dim)))
    if data.draw(st.booleans()):
        v = dict(v)
        key = M.basis[data.draw(st.integers(0, M.dim - 1))]
        v[key] = v.get(key, 0) + data.draw(st.integers(1, 3))
    assert specht_membership(v, lam.parts, p, "kernel") == specht_membership(v, lam.parts, p, "basis")


@settings(max_examples=30, deadline=None)
@given(shift_pair_st(2, 6))
def test_semistandard_homs_are_equivariant(pair):
    alpha, a, b, beta = pair
    for _, T in enumerate_semistandard_one_box(alpha, a, b)[:2]:
        assert theta_T(T).is_equivariant()


def test_theta_rejects_non_semistandard():
    with pytest.raises(InvalidTableauError):
        theta_T(Tableau.parse("21/1"))


def test_explicit_map_example():
    cp = carter_payne_explicit(Partition((4, 3)), 1, 3)
    assert cp.hooks == (5, 3) and cp.h_a == 5
    assert {str(S): c for S, c in cp.coefficients.items()} == {"{1}": -3, "{1,2}": 1}
    assert cp.hom.is_equivariant()


def test_explicit_map_residue_condition():
    with pytest.raises(ResidueConditionError):
        carter_payne_explicit(Partition((4, 3)), 1, 3, 3)
    with pytest.raises(CharacteristicTwoError):
        carter_payne_explicit(Partition((2,)), 1, 2, 2)


@settings(max_examples=30, deadline=None)
@given(shift_pair_st(2, 6))
def test_explicit_image_lies_in_specht_mod_h(pair):
    alpha, a, b, beta = pair
    cp = carter_payne_explicit(alpha, a, b)
    t = row_reading_tableau(alpha.parts)
    img = cp.image(t)
    assert img
    for p in (3, 5, 7):
        if cp.h_a % p == 0:
            assert specht_membership(img, beta.parts, p)


def test_jm_example():
    jm = carter_payne_jm(Partition((4, 3, 1)), 3, 1, 5)
    assert jm.contents == (1, -2)
    assert jm.alpha == Partition((4, 3)) and jm.beta == Partition((3, 3, 1))
    assert jm.integral_ok and jm.lower_ok
    ex = carter_payne_explicit(Partition((4, 3)), 1, 3, 5).hom.coordinates()
    assert proportionality_scalar(jm.matrix, ex, 5) == 1
    assert jm_layers_for_shift(Partition((4, 3)), 1, 3) == (Partition((4, 3, 1)), 3, 1)


def test_jm_refuses_bad_input():
    with pytest.raises(CharacteristicTwoError):
        carter_payne_jm(Partition((4, 3, 1)), 3, 1, 2)
    with pytest.raises(SpechtError):
        carter_payne_jm(Partition((4, 3, 1)), 1, 3, 5)
    with pytest.raises(ResidueConditionError):
        carter_payne_jm(Partition((4, 3, 1)), 2, 1, 5)


def test_proportionality_scalar():
    A = np.array([[1, 2], [0, 3]], dtype=object)
    assert proportionality_scalar(A, A, 5) == 1
    assert proportionality_scalar((2 * A) % 5, A, 5) == 2
    assert proportionality_scalar(np.array([[1, 0], [0, 1]], dtype=object), A, 5) is None


@settings(max_examples=15, deadline=None)
@given(partition_st(2, 5), st.sampled_from([3, 5]))
def test_specht_modules_have_trivial_endomorphisms(lam, p):
    assert hom_space(lam, lam, p).dimension == 1


def test_hom_space_examples():
    assert hom_space(Partition((4, 3)), Partition((3, 3, 1)), 5).dimension == 1
    assert hom_space(Partition((4, 3)), Partition((3, 3, 1)), 3).dimension == 0
    # characteristic two is accepted by the brute-force routine
    assert hom_space(Partition((2,)), Partition((1, 1)), 2).dimension == 1
    H = hom_space(Partition((2, 1)), Partition((1, 1, 1)), 3)
    assert H.dimension == 1 and H.homs()[0].is_equivariant()


def test_hook():
    assert [hook(Partition((4, 3)), 3, i) for i in (1, 2)] == [5, 3]


def test_endo_restriction_example():
    R = endo_ring_restriction(Partition((4, 3, 1)), 5)
    assert R.consistent
    assert R.end_dimension == 3 and R.module_dimension == 70
    assert [(b.residue, b.multiplicity, b.nilpotency_index) for b in R.blocks] == [(1, 1, 1), (3, 2, 2)]
    with pytest.raises(CharacteristicTwoError):
        endo_ring_restriction(Partition((2, 1)), 2)


@pytest.mark.parametrize("mu", [mu for m in range(1, 5) for mu in partitions(m)])
def test_endo_induction(mu):
    for p in (3, 5):
        R = endo_ring_induction(mu, p)
        assert R.consistent
        assert R.module_dimension == (mu.n + 1) * standard_basis(mu).dim


def test_composite_chain():
    C = compose_cp_chain(Partition((4, 3, 1)), 3, 1, 5)
    assert C.chain == [3, 1] and C.spans
    with pytest.raises(ResidueConditionError):
        compose_cp_chain(Partition((4, 3, 1)), 2, 1, 5)
