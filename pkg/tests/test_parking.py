import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knaples.parking import (ParkingOutcome, is_k_naples, minimal_k, park,
                             park_filled, parse_preference, format_preference,
                             rearrangements_all_k_naples)


def brute_force_parks(pref, k):
    """Reference simulation written independently: scan candidate spots."""
    n = len(pref)
    taken = set()
    for a in pref:
        candidates = [a] + list(range(a - 1, max(1, a - k) - 1, -1)) + \
            list(range(a + 1, n + 1))
        for spot in candidates:
            if spot not in taken:
                taken.add(spot)
                break
        else:
            return False
    return True


def test_classical_example():
    assert park((2, 2, 1, 4), 0).assignment == (2, 3, 1, 4)


def test_naples_running_example():
    assert park((6, 6, 6, 5, 5, 2, 1), 2).assignment == (6, 5, 4, 3, 7, 2, 1)
    outcome = park((6, 6, 6, 5, 5, 2, 1), 1)
    assert not outcome.ok
    assert outcome.failed_car == 5


def test_empty_lot():
    outcome = park((), 0)
    assert outcome.ok
    assert outcome.assignment == ()
    assert str(outcome) == "ok:"


def test_outcome_text_forms():
    assert str(park((2, 2, 1, 4), 0)) == "ok: 2,3,1,4"
    assert str(park((6, 6, 6, 5, 5, 2, 1), 1)) == "fail@5"


def test_preference_validation():
    with pytest.raises(ValueError):
        park((0, 1), 0)
    with pytest.raises(ValueError):
        park((1, 3), 0)
    with pytest.raises(ValueError):
        park((1,), -1)


def test_preference_text_round_trip():
    assert parse_preference("6,6,6,5,5,2,1") == (6, 6, 6, 5, 5, 2, 1)
    assert parse_preference("") == ()
    assert format_preference((1, 2)) == "1,2"
    with pytest.raises(ValueError):
        parse_preference("1,x")


def test_park_filled_resumes_the_running_example():
    outcome = park_filled((6, 5, 4, 3), (5, 2, 1), 2)
    assert outcome.assignment == (6, 5, 4, 3, 7, 2, 1)


def test_park_filled_trivial_and_failing():
    assert park_filled((1,), (), 0).assignment == (1,)
    outcome = park_filled((2, 3), (3,), 0)
    assert not outcome.ok
    assert outcome.failed_car == 3


def test_park_filled_rejects_duplicate_spots():
    with pytest.raises(ValueError):
        park_filled((2, 2), (1,), 0)


def test_is_k_naples_ascending_example():
    assert is_k_naples((1, 2, 5, 5, 6, 6, 6), 3)
    assert not is_k_naples((1, 2, 5, 5, 6, 6, 6), 2)
    assert is_k_naples((1, 1, 1), 0)


def test_minimal_k_values():
    assert minimal_k((6, 6, 6, 5, 5, 2, 1)) == 2
    assert minimal_k((1, 2, 3, 4)) == 0
    assert minimal_k((1, 3, 5, 5, 6, 6)) == 4
    with pytest.raises(ValueError):
        minimal_k(())


def test_rearrangement_closure_examples():
    assert not rearrangements_all_k_naples((6, 6, 5, 5, 3, 1), 2)
    assert rearrangements_all_k_naples((1, 3, 3, 5, 6, 6), 2)
    assert rearrangements_all_k_naples((1,), 0)


def test_example_2_4_facts_settled_by_the_simulator():
    # the text says both of these, and the simulator agrees with both
    assert is_k_naples((6, 6, 5, 5, 3, 1), 2)
    assert not is_k_naples((3, 5, 1, 6, 6, 5), 2)
    assert not is_k_naples((1, 3, 5, 5, 6, 6), 2)


@given(st.data())
@settings(max_examples=200, deadline=None)
def test_agrees_with_reference_simulation(data):
    n = data.draw(st.integers(1, 7))
    pref = tuple(data.draw(st.lists(st.integers(1, n), min_size=n, max_size=n)))
    k = data.draw(st.integers(0, n))
    assert is_k_naples(pref, k) == brute_force_parks(pref, k)


@given(st.data())
@settings(max_examples=200, deadline=None)
def test_success_gives_a_permutation(data):
    n = data.draw(st.integers(1, 8))
    pref = tuple(data.draw(st.lists(st.integers(1, n), min_size=n, max_size=n)))
    k = data.draw(st.integers(0, n))
    outcome = park(pref, k)
    if outcome.ok:
        assert sorted(outcome.assignment) == list(range(1, n + 1))
    else:
        assert 1 <= outcome.failed_car <= n


@given(st.data())
@settings(max_examples=150, deadline=None)
def test_monotone_in_k(data):
    n = data.draw(st.integers(1, 7))
    pref = tuple(data.draw(st.lists(st.integers(1, n), min_size=n, max_size=n)))
    k = data.draw(st.integers(0, n - 1))
    if is_k_naples(pref, k):
        assert is_k_naples(pref, k + 1)


def test_complete_at_k_equal_n_minus_1():
    for n in range(1, 6):
        for pref in itertools.product(range(1, n + 1), repeat=n):
            assert is_k_naples(pref, n - 1)


def test_k_beyond_n_behaves_like_full_reach():
    for pref in itertools.product(range(1, 5), repeat=4):
        assert park(pref, 3) == park(pref, 99)


def test_k_zero_is_the_classical_rule():
    # the backward scan is empty, so outcomes match the forward-only rule
    for pref in itertools.product(range(1, 5), repeat=4):
        outcome = park(pref, 0)
        taken = set()
        expected = []
        stuck = None
        for i, a in enumerate(pref, 1):
            spot = next((s for s in range(a, 5) if s not in taken), None)
            if spot is None:
                stuck = i
                break
            taken.add(spot)
            expected.append(spot)
        if stuck is None:
            assert outcome.assignment == tuple(expected)
        else:
            assert outcome.failed_car == stuck


def lemma_2_2_holds(pref, k):
    """All single-spot backward modifications of parked prefixes still park."""
    outcome = park(pref, k)
    if not outcome.ok:
        return True
    d = outcome.assignment
    n = len(pref)
    for i in range(1, n + 1):
        occupied = set(d[:i])
        for l in range(1, i + 1):
            for spot in range(1, d[l - 1]):
                if spot in occupied:
                    continue
                filled = list(d[:i])
                filled[l - 1] = spot
                if not park_filled(filled, pref[i:], k).ok:
                    return False
    return True


@pytest.mark.parametrize("n", range(1, 6))
def test_filled_modification_lemma_exhaustive(n):
    for pref in itertools.product(range(1, n + 1), repeat=n):
        for k in range(0, min(n, 4)):
            assert lemma_2_2_holds(pref, k)


@given(st.data())
@settings(max_examples=120, deadline=None)
def test_filled_modification_lemma_sampled(data):
    n = data.draw(st.integers(6, 7))
    pref = tuple(data.draw(st.lists(st.integers(1, n), min_size=n, max_size=n)))
    k = data.draw(st.integers(0, 3))
    assert lemma_2_2_holds(pref, k)


def test_outcome_value_semantics():
    assert ParkingOutcome((1, 2)) == ParkingOutcome((1, 2))
    assert ParkingOutcome((1, 2)).ok
    assert not ParkingOutcome(None, 3).ok
