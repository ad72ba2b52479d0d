from hypothesis import given, settings

from spechtkit.combinatorics import Partition, SemistandardSet
from spechtkit.homomorphisms import carter_payne_explicit
from spechtkit.relations import (
    check_adjacent_relation,
    check_closed_form,
    check_explicit_relations,
    check_removable_reduction,
    check_semistandard_relations,
    lambda_from_hom,
    lambda_kernel,
    predict_psi,
    proportional,
    relation_suite,
)
from strategies import shift_pair_st


def test_predictions_on_worked_example():
    alpha = Partition((4, 3))
    T1 = SemistandardSet(alpha, 1, 3, frozenset({1}))
    T12 = SemistandardSet(alpha, 1, 3, frozenset({1, 2}))
    # psi_{2,0}: i = 2 lies in {1,2} and maps to b = 3
    assert predict_psi(T1, 2, 0).rule == "i-not-in-T"
    assert predict_psi(T12, 1, 2).coefficient == 5 - 3
    assert predict_psi(T1, 1, 0).coefficient == 0


@settings(max_examples=40, deadline=None)
@given(shift_pair_st(2, 6))
def test_relations_hold(pair):
    alpha, a, b, _ = pair
    assert all(r.ok for r in check_semistandard_relations(alpha, a, b))
    assert all(r.ok for r in check_explicit_relations(alpha, a, b))


def test_relation_suite_small():
    results = relation_suite(5)
    assert results and all(r.ok for r in results)


@settings(max_examples=40, deadline=None)
@given(shift_pair_st(2, 6))
def test_rational_kernel_is_the_explicit_line(pair):
    alpha, a, b, _ = pair
    K = lambda_kernel(alpha, a, b)
    cp = carter_payne_explicit(alpha, a, b)
    assert len(K) == 1 and proportional(K[0], cp.coefficients)
    assert check_removable_reduction(cp.coefficients)
    assert check_closed_form(cp.coefficients)
    # the adjacent recursion involves h_a, so it only holds modulo a prime dividing h_a
    for q in (3, 5, 7):
        if cp.h_a % q == 0:
            assert check_adjacent_relation(cp.coefficients, q)[0]


def test_coefficients_of_brute_force_homs():
    alpha = Partition((4, 3, 3, 2, 1))
    cp = carter_payne_explicit(alpha, 1, 6)
    assert cp.h_a == 8
    assert cp.hooks == (8, 6, 5, 3, 1)
    lams = lambda_from_hom(Partition((4, 3)), 1, 3, 5)
    assert len(lams) == 1
    lam = lams[0]
    assert check_removable_reduction(lam, 5) and check_closed_form(lam, 5)
    assert proportional(lam, carter_payne_explicit(Partition((4, 3)), 1, 3).coefficients, 5)
