import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knaples.parking import is_k_naples, minimal_k
from knaples.paths import (ascending_is_k_naples_path,
                           ascending_pref_from_path, descending_pref_from_path,
                           embed, embedded_ascending_criterion, heights,
                           is_dyck_path, is_k_dyck_path, is_strictly_k,
                           iter_k_dyck_paths, max_deficit,
                           path_from_ascending_pref, path_from_descending_pref,
                           reflect_after_first_return, unembed)

RUNNING_DESC = "UDUDDDUUDUUUDD"  # the path of (6,6,6,5,5,2,1)


def ascending_prefs(n):
    return itertools.combinations_with_replacement(range(1, n + 1), n)


def test_pref_from_path_examples():
    assert ascending_pref_from_path("UDDUUDDUDUUD") == (1, 3, 3, 5, 6, 6)
    assert ascending_pref_from_path(RUNNING_DESC) == (1, 2, 5, 5, 6, 6, 6)
    assert ascending_pref_from_path("UUDD") == (1, 1)


def test_path_from_pref_examples():
    assert path_from_ascending_pref((1, 3, 3, 5, 6, 6)) == "UDDUUDDUDUUD"
    assert max_deficit("UDDUUDDUDUUD") == 1
    assert path_from_ascending_pref((1, 1, 2)) == "UUDUDD"
    assert max_deficit("UUDUDD") == 0
    assert path_from_ascending_pref((1,)) == "UD"
    assert path_from_ascending_pref(()) == ""


def test_path_from_pref_rejects_non_ascending():
    with pytest.raises(ValueError):
        path_from_ascending_pref((2, 1))
    with pytest.raises(ValueError):
        path_from_ascending_pref((1, 5))


def test_descending_examples():
    assert descending_pref_from_path(RUNNING_DESC) == (6, 6, 6, 5, 5, 2, 1)
    assert descending_pref_from_path("UUDD") == (1, 1)
    assert descending_pref_from_path("UDUD") == (2, 1)
    assert path_from_descending_pref((6, 6, 6, 5, 5, 2, 1)) == RUNNING_DESC


def test_heights_and_k_dyck_validity():
    assert heights("UDD") == [0, 1, 0, -1]
    assert is_dyck_path("UUDD")
    assert not is_dyck_path("UDD U".replace(" ", ""))
    assert is_k_dyck_path("UDDUUDDUDUUD", 1)
    assert is_k_dyck_path("UDDUUDDUDUUD", 2)  # a (k-1)-Dyck path is k-Dyck
    assert not is_k_dyck_path("UDDUUDDUDUUD", 0)
    assert not is_k_dyck_path("DU", 1)  # ends with U
    assert is_k_dyck_path("", 0)


def test_ascending_criterion_paper_examples():
    assert ascending_is_k_naples_path("UDDUUDDUDUUD", 2)
    assert not ascending_is_k_naples_path("UDDUUDDUDUUD", 1)
    assert not ascending_is_k_naples_path("UDDUDDUUDUUD", 2)
    # never dips below the axis: any k works
    assert ascending_is_k_naples_path("UUDDUD", 0)


def test_round_trip_paths_to_prefs_exhaustive():
    for n in range(0, 9):
        for k in range(0, 3):
            for word in iter_k_dyck_paths(n, k):
                pref = ascending_pref_from_path(word)
                assert list(pref) == sorted(pref)
                assert path_from_ascending_pref(pref) == word


def test_round_trip_prefs_to_paths_exhaustive():
    for n in range(0, 9):
        for pref in ascending_prefs(n):
            word = path_from_ascending_pref(pref)
            assert ascending_pref_from_path(word) == pref
            assert is_k_dyck_path(word, max_deficit(word))


def test_criterion_matches_simulator():
    for n in range(0, 8):
        for pref in ascending_prefs(n):
            word = path_from_ascending_pref(pref)
            for k in range(0, 4):
                assert ascending_is_k_naples_path(word, k) == \
                    is_k_naples(pref, k)


def test_embed_examples():
    assert embed(RUNNING_DESC, 2) == "UU" + RUNNING_DESC + "DD"
    assert embed("", 1) == "UD"
    assert embed("UD", 1) == "UUDD"


def test_embed_rejects_too_deep_paths():
    with pytest.raises(ValueError):
        embed("UDDUUDDUDUUD", 0)


def test_unembed_examples():
    assert unembed("UU" + RUNNING_DESC + "DD", 2) == RUNNING_DESC
    assert unembed("UUUDDD", 3) == ""
    assert unembed("UUDD", 2) == ""  # embed((), 2) round trip
    with pytest.raises(ValueError):
        unembed("UDUD", 1)  # inner word DU ends with U
    with pytest.raises(ValueError):
        unembed("UDDU", 2)  # margins missing


def test_embed_margins_and_round_trip_exhaustive():
    for n in range(0, 8):
        for k in range(0, 4):
            for word in iter_k_dyck_paths(n, k):
                big = embed(word, k)
                assert is_dyck_path(big)
                assert big.startswith("U" * k)
                if n:
                    assert big.endswith("D" * (k + 1))
                assert unembed(big, k) == word


def test_strictness_examples():
    assert is_strictly_k(RUNNING_DESC, 2)
    assert not is_strictly_k(RUNNING_DESC, 3)
    assert not is_strictly_k("UUDD", 1)
    assert is_strictly_k("UUDD", 0)


def test_strictness_matches_minimal_k():
    for n in range(1, 9):
        for asc in ascending_prefs(n):
            pref = tuple(reversed(asc))
            word = path_from_descending_pref(pref)
            need = minimal_k(pref)
            for k in range(0, 4):
                if is_k_dyck_path(word, k):
                    assert is_strictly_k(word, k) == (need == k)


def test_reflection_examples():
    assert reflect_after_first_return("UUDDUUDD", 1) == "UUDDUUDD"
    big = embed(RUNNING_DESC, 2)
    reflected = reflect_after_first_return(big, 2)
    assert reflect_after_first_return(reflected, 2) == big
    with pytest.raises(ValueError):
        reflect_after_first_return("UUDD", 2)  # no interior return


def test_reflection_is_an_involution_with_upward_returns():
    for n in range(1, 8):
        for k in range(1, 3):
            for word in iter_k_dyck_paths(n, k):
                if max_deficit(word) != k:
                    continue
                big = embed(word, k)
                out = reflect_after_first_return(big, k)
                assert is_dyck_path(out)
                assert out.startswith("U" * k)
                t = heights(out).index(0, 1) - 1
                assert out[t + 1:t + k + 2] == "U" * (k + 1)
                assert reflect_after_first_return(out, k) == big


def test_embedded_criterion_agrees():
    for n in range(0, 8):
        for pref in ascending_prefs(n):
            word = path_from_ascending_pref(pref)
            for k in range(1, 4):
                if is_k_dyck_path(word, k):
                    assert embedded_ascending_criterion(embed(word, k), k) == \
                        ascending_is_k_naples_path(word, k)


def test_path_counts_match_descending_counts():
    # the number of k-Dyck paths equals the descending k-Naples count
    from knaples.counting import count_descending_total
    for n in range(1, 9):
        for k in range(0, 4):
            assert sum(1 for _ in iter_k_dyck_paths(n, k)) == \
                count_descending_total(n, k)


@given(st.data())
@settings(max_examples=150, deadline=None)
def test_descending_pref_of_a_path_is_k_naples(data):
    n = data.draw(st.integers(1, 8))
    k = data.draw(st.integers(0, 3))
    words = list(iter_k_dyck_paths(n, k))
    word = data.draw(st.sampled_from(words))
    assert is_k_naples(descending_pref_from_path(word), k)
