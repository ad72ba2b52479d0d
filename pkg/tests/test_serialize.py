from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spechtkit import serialize as ser
from spechtkit.combinatorics import enumerate_semistandard_one_box
from spechtkit.errors import SpechtError
from spechtkit.specht import polytabloid
from strategies import bijective_tableau_st, partition_st, shift_pair_st


@given(partition_st(0, 8))
def test_partition_round_trip(lam):
    assert ser.decode_partition(ser.loads(ser.dumps(ser.encode_partition(lam)))) == lam


@given(bijective_tableau_st(1, 6))
def test_tableau_and_vector_round_trip(t):
    assert ser.decode_tableau(ser.loads(ser.dumps(ser.encode_tableau(t)))) == t
    v = polytabloid(t)
    data = ser.encode_vector(v, t.shape)
    assert ser.decode_vector(ser.loads(ser.dumps(data))) == v
    assert ser.dumps(data) == ser.dumps(ser.encode_vector(dict(reversed(list(v.items()))), t.shape))


@settings(max_examples=30, deadline=None)
@given(shift_pair_st(2, 6))
def test_set_round_trip(pair):
    alpha, a, b, _ = pair
    for S, _ in enumerate_semistandard_one_box(alpha, a, b):
        assert ser.decode_set(ser.loads(ser.dumps(ser.encode_set(S)))) == S


@given(st.lists(st.lists(st.fractions(max_denominator=5), min_size=3, max_size=3), min_size=1, max_size=4))
def test_matrix_round_trip(rows):
    A = np.array(rows, dtype=object)
    B = ser.decode_matrix(ser.loads(ser.dumps(ser.encode_matrix(A))))
    assert B.shape == A.shape
    assert all(Fraction(x) == Fraction(y) for x, y in zip(A.flat, B.flat))


def test_vector_type_checked():
    with pytest.raises(SpechtError):
        ser.decode_vector({"type": [2, 1], "terms": [[[[1], [2, 3]], 1]]})
