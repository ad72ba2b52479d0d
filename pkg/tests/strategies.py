"""Shared hypothesis strategies."""
from hypothesis import strategies as st

from spechtkit.combinatorics import Partition, one_box_shift_pairs, partitions, standard_tableaux

PARTITIONS = {n: list(partitions(n)) for n in range(0, 9)}
SHIFT_PAIRS = {n: list(one_box_shift_pairs(n)) for n in range(2, 7)}


def partition_st(lo: int = 1, hi: int = 6):
    return st.integers(lo, hi).flatmap(lambda n: st.sampled_from(PARTITIONS[n]))


def shift_pair_st(lo: int = 2, hi: int = 6):
    return st.integers(lo, hi).flatmap(lambda n: st.sampled_from(SHIFT_PAIRS[n]))


def permutation_st(n: int):
    return st.permutations(range(1, n + 1)).map(tuple)


@st.composite
def standard_tableau_st(draw, lo: int = 1, hi: int = 6):
    lam = draw(partition_st(lo, hi))
    return draw(st.sampled_from(standard_tableaux(lam)))


@st.composite
def bijective_tableau_st(draw, lo: int = 1, hi: int = 6):
    lam: Partition = draw(partition_st(lo, hi))
    perm = draw(permutation_st(lam.n))
    it = iter(perm)
    from spechtkit.combinatorics import Tableau

    return Tableau(tuple(tuple(next(it) for _ in range(m)) for m in lam.parts))
