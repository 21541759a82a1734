from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibtree import (
    ROOT,
    DomainError,
    apply_step,
    as_code,
    as_root,
    as_state,
    decode_state,
    enumerate_codes,
    enumerate_states,
    evaluate,
    reduce_state,
    reflect,
    trace,
    value,
)
from fixtures import LENGTH4_TABLE
from oracle import fib_by_addition, state_by_matrices, value_by_matrices

codes = st.text(alphabet="01", max_size=40)


# ------------------------------------------------------ oracle agreement

def test_values_match_matrix_oracle_exhaustively():
    for length in range(11):
        for code in enumerate_codes(length):
            assert evaluate(code) == state_by_matrices(code)


@given(codes, st.integers(1, 50), st.integers(1, 50))
def test_values_match_matrix_oracle_at_any_root(code, a, b):
    root = (a, b, a + b)
    assert value(code, root) == value_by_matrices(code, root)


# --------------------------------------------------------- named values

@pytest.mark.parametrize("code,val", [
    ("1011", 19),
    ("1101", 19),
    ("1010000", 32),
    ("0000101", 32),
    ("10011", 25),
    ("01110", 25),
])
def test_named_values(code, val):
    assert value(code) == val


@pytest.mark.parametrize("code,state", [
    ("1100", (3, 11, 14)),
    ("0101", (7, 10, 17)),
])
def test_named_states(code, state):
    assert evaluate(code) == state


def test_length_four_table_states():
    for code, state, _ in LENGTH4_TABLE:
        assert evaluate(code) == state


def test_trace_shape_and_steps():
    states = trace("1100")
    assert states == [(1, 2, 3), (2, 3, 5), (3, 5, 8), (3, 8, 11), (3, 11, 14)]
    for code, state, _ in LENGTH4_TABLE:
        t = trace(code)
        assert len(t) == len(code) + 1
        assert t[0] == ROOT and t[-1] == state
        for prev, bit, cur in zip(t, code, t[1:]):
            assert apply_step(prev, int(bit)) == cur


# ----------------------------------------------------------- structure

@given(codes)
def test_states_stay_ordered_and_coprime(code):
    a, b, c = evaluate(code)
    assert a < b < c and a + b == c
    assert gcd(a, b) == gcd(b, c) == gcd(a, c) == 1


@given(codes)
def test_sibling_one_exceeds_sibling_zero(code):
    assert value(code + "1") > value(code + "0") > value(code)


@given(codes)
def test_reflection_preserves_value(code):
    assert value(reflect(code)) == value(code)
    assert reflect(reflect(code)) == code


def test_closed_form_runs():
    for k in range(1, 31):
        assert value("1" * k) == fib_by_addition(k + 4)
        assert value("0" * k) == k + 3


# ------------------------------------------------------ decode / reduce

def test_decode_inverts_evaluate_exhaustively():
    for length in range(13):
        for code in enumerate_codes(length):
            assert decode_state(evaluate(code)) == code


def test_reduce_peels_the_last_bit():
    for length in range(1, 11):
        for code in enumerate_codes(length):
            parent, bit = reduce_state(evaluate(code))
            assert parent == evaluate(code[:-1])
            assert str(bit) == code[-1]


def test_reduce_rejects_root_and_unreachable():
    with pytest.raises(DomainError):
        reduce_state(ROOT)
    with pytest.raises(DomainError):
        reduce_state((2, 4, 6))
    with pytest.raises(DomainError):
        decode_state((2, 4, 6))
    with pytest.raises(DomainError):
        decode_state((3, 2, 5))


# --------------------------------------------------------- enumeration

def test_enumerate_codes_orders_by_integer():
    assert list(enumerate_codes(0)) == [""]
    assert list(enumerate_codes(2)) == ["00", "01", "10", "11"]
    with pytest.raises(DomainError):
        list(enumerate_codes(-1))


def test_enumerate_states_small_bound():
    got = set(enumerate_states(5))
    assert got == {
        ((1, 2, 3), ""),
        ((1, 3, 4), "0"),
        ((2, 3, 5), "1"),
        ((1, 4, 5), "00"),
    }


def test_enumerate_states_complete_and_consistent():
    seen = dict(enumerate_states(120))
    for state, code in seen.items():
        assert evaluate(code) == state
    # completeness: every code of length <= 6 whose value fits must appear
    for length in range(7):
        for code in enumerate_codes(length):
            s = evaluate(code)
            if s[2] <= 120:
                assert seen[s] == code


# ----------------------------------------------------------- validation

def test_code_validation():
    assert as_code("") == ""
    with pytest.raises(DomainError):
        as_code("102")
    with pytest.raises(DomainError):
        as_code(1011)


def test_state_validation():
    assert as_state((1, 2, 3)) == (1, 2, 3)
    assert as_root((2, 1, 3)) == (2, 1, 3)
    with pytest.raises(DomainError):
        as_state((0, 2, 2))
    with pytest.raises(DomainError):
        as_state((1, 2, 4))
    with pytest.raises(DomainError):
        apply_step((1, 2, 3), 2)


@settings(max_examples=30)
@given(codes, st.integers(1, 30), st.integers(1, 30))
def test_generalized_roots_keep_the_sum_shape(code, a, b):
    s = evaluate(code, (a, b, a + b))
    assert s[2] == s[0] + s[1]
