import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twconj.zdirectsum import (
    FinSuppIntSeq,
    phi_example,
    phi_minus_id,
    psi_example,
    random_sequence,
    solve_phi_minus_id,
)

seqs = st.dictionaries(st.integers(min_value=1, max_value=40), st.integers(min_value=-100, max_value=100),
                       max_size=30).map(FinSuppIntSeq)


def naive_phi(values):
    """Apply the defining formulas on a padded dense list (1-indexed via offset)."""
    a = list(values) + [0, 0, 0]
    out = []
    for i in range(len(values)):
        k = i + 1
        out.append(a[i] + a[i + 1] + a[i + 2] if k % 2 else a[i] + a[i + 1])
    return out


def test_unit_vectors():
    e = FinSuppIntSeq.unit
    assert phi_example(e(1)) == e(1)
    assert phi_example(e(2)) == e(1) + e(2)
    assert phi_example(e(3)) == e(1) + e(2) + e(3)
    assert phi_example(e(4)) == e(3) + e(4)


def test_solve_small_targets():
    e = FinSuppIntSeq.unit
    assert solve_phi_minus_id(e(1)) == e(2)
    assert solve_phi_minus_id(e(2)) == e(3) - e(2)


def test_zero_entries_dropped():
    assert FinSuppIntSeq({1: 0, 3: 2}).support == (3,)
    with pytest.raises(ValueError):
        FinSuppIntSeq({0: 1})


@given(seqs)
def test_phi_matches_dense_formula(a):
    dense = [a[k] for k in range(1, a.max_index + 3)]
    assert phi_example(a) == FinSuppIntSeq.from_list(naive_phi(dense))


@given(seqs)
def test_psi_inverts_phi(a):
    assert psi_example(phi_example(a)) == a
    assert phi_example(psi_example(a)) == a


@given(seqs)
def test_phi_minus_id_is_onto(t):
    a = solve_phi_minus_id(t)
    assert phi_minus_id(a) == t
    assert phi_example(a) - a == t


@given(seqs, seqs)
def test_phi_is_additive(a, b):
    assert phi_example(a + b) == phi_example(a) + phi_example(b)


@given(seqs)
def test_json_round_trip(a):
    assert FinSuppIntSeq.from_json(a.to_json()) == a


def test_random_sequence_is_seeded():
    r1, r2 = random.Random(3), random.Random(3)
    xs = [random_sequence(r1) for _ in range(20)]
    assert xs == [random_sequence(r2) for _ in range(20)]
    assert all(len(x.support) <= 30 for x in xs)
