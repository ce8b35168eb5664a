import itertools

import pytest

from knaples.parking import is_k_naples, minimal_k
from knaples.paths import embed, is_k_dyck_path, iter_k_dyck_paths, \
    path_from_ascending_pref
from knaples.series import catalan
from knaples.trees import (FULL_LEAF, all_addresses, ascending_tree_criterion,
                           assemble_strict_tree, check_traversal_heights,
                           descending_from_strict_tree, diagonal_depth,
                           dyck_from_full_tree, dyck_from_tree, format_full_tree,
                           format_tree, full_size, full_tree_from_dyck, graft,
                           is_strict_descending_tree, iter_trees,
                           parse_full_tree, parse_tree, prune,
                           strict_tree_from_descending, strict_tree_slots,
                           traversal, tree_from_dyck, tree_size)

RUNNING = (6, 6, 6, 5, 5, 2, 1)

# the four-node tree of the traversal figure: root with a left child that
# has two children of its own
FIG_TREE = (((None, None), (None, None)), None)


def test_word_of_tree_examples():
    assert dyck_from_full_tree(FULL_LEAF) == ""
    assert dyck_from_full_tree(((), ())) == "UD"
    assert full_tree_from_dyck("") == FULL_LEAF
    assert full_tree_from_dyck("UUDD") == (((), ()), ())
    assert full_tree_from_dyck("UDUD") == ((), ((), ()))


def test_full_tree_round_trip_exhaustive():
    for n in range(0, 9):
        for word in iter_k_dyck_paths(n, 0):
            t = full_tree_from_dyck(word)
            assert full_size(t) == 2 * n + 1
            assert dyck_from_full_tree(t) == word


def test_prune_graft():
    assert prune(FULL_LEAF) is None
    assert graft(None) == FULL_LEAF
    assert graft((None, None)) == ((), ())
    for m in range(0, 8):
        for b in iter_trees(m):
            t = graft(b)
            assert full_size(t) == 2 * m + 1
            assert prune(t) == b


def test_running_example_tree_sizes():
    # the embedded path of the running example parses to a 19-vertex full
    # tree, pruning to 9 nodes
    word = embed(path_from_ascending_pref(tuple(sorted(RUNNING))), 2)
    t = full_tree_from_dyck(word)
    assert full_size(t) == 19
    assert tree_size(prune(t)) == 9


def test_catalan_many_trees():
    for m in range(0, 11):
        assert sum(1 for _ in iter_trees(m)) == catalan(m)


def test_diagonal_depth():
    tree = FIG_TREE
    assert diagonal_depth(tree, "") == 0
    assert diagonal_depth(tree, "L") == 1
    assert diagonal_depth(tree, "LR") == 1
    assert diagonal_depth(tree, "LL") == 2
    with pytest.raises(ValueError):
        diagonal_depth(tree, "R")


def test_traversal_figure_numbering():
    # nine visits: root, A, B, B, A, C, C, A, root
    assert traversal(FIG_TREE) == ["", "L", "LL", "LL", "L", "LR", "LR",
                                   "L", ""]


def test_traversal_conventions():
    assert traversal((None, None)) == [""]
    assert traversal((None, (None, None))) == ["", "R", "R", ""]
    assert traversal(((None, None), None)) == ["", "L", "L", ""]
    with pytest.raises(ValueError):
        traversal(None)


def test_traversal_multiplicities():
    for m in range(2, 8):
        for b in iter_trees(m):
            counts = {}
            for addr in traversal(b):
                counts[addr] = counts.get(addr, 0) + 1
            for addr in all_addresses(b):
                node = b
                for move in addr:
                    node = node[0] if move == "L" else node[1]
                children = sum(1 for c in node if c is not None)
                assert counts[addr] == (3 if children == 2 else 2)


def test_traversal_heights_exhaustive():
    for m in range(1, 8):
        for b in iter_trees(m):
            assert check_traversal_heights(b)


def test_ascending_tree_criterion_matches_simulator():
    for n in range(1, 7):
        for pref in itertools.combinations_with_replacement(
                range(1, n + 1), n):
            word = path_from_ascending_pref(pref)
            for k in range(1, 4):
                if not is_k_dyck_path(word, k):
                    continue
                tree = tree_from_dyck(embed(word, k))
                assert ascending_tree_criterion(tree, k) == \
                    is_k_naples(pref, k)


def test_strict_tree_running_example():
    tree = strict_tree_from_descending(RUNNING, 2)
    assert tree_size(tree) == 9
    assert is_strict_descending_tree(tree, 7, 2)
    assert descending_from_strict_tree(tree, 2) == RUNNING
    sizes = [tree_size(s) for s in strict_tree_slots(tree, 2)]
    assert sum(sizes) == 7 - 2 - 1


def test_strict_tree_shape_negatives():
    assert not is_strict_descending_tree(None, 0, 2)
    assert not is_strict_descending_tree((None, None), 1, 2)  # wrong size
    # 9 nodes but no right child under the root
    chain = None
    for _ in range(9):
        chain = (chain, None)
    assert not is_strict_descending_tree(chain, 7, 2)


def test_strict_tree_count_429():
    hits = sum(1 for b in iter_trees(9)
               if is_strict_descending_tree(b, 7, 2))
    assert hits == 429


def test_minimal_strict_tree_has_empty_slots():
    for k in range(0, 4):
        n = k + 1
        pref = tuple(range(n, 0, -1))  # (n, n-1, ..., 1) is strictly k-Naples
        if k:
            assert minimal_k(pref) == k
        tree = strict_tree_from_descending(pref, k)
        slots = strict_tree_slots(tree, k)
        assert len(slots) == 2 * k + 2
        assert all(s is None for s in slots)
        assert assemble_strict_tree(slots, k) == tree


def test_slot_round_trip_exhaustive():
    for n in range(1, 8):
        for k in range(0, 3):
            for b in iter_trees(n + k):
                if not is_strict_descending_tree(b, n, k):
                    continue
                slots = strict_tree_slots(b, k)
                assert sum(tree_size(s) for s in slots) == n - k - 1
                assert assemble_strict_tree(slots, k) == b


def test_slot_tuples_biject():
    # every tuple of slot trees assembles to a distinct strict tree
    k = 1
    seen = set()
    pool = [t for m in range(0, 3) for t in iter_trees(m)]
    for slots in itertools.product(pool, repeat=4):
        b = assemble_strict_tree(list(slots), k)
        n = tree_size(b) - k
        assert is_strict_descending_tree(b, n, k)
        assert strict_tree_slots(b, k) == list(slots)
        seen.add(b)
    assert len(seen) == len(pool) ** 4


def test_strict_preference_round_trip_exhaustive():
    for n in range(1, 8):
        for k in range(0, 3):
            for asc in itertools.combinations_with_replacement(
                    range(1, n + 1), n):
                pref = tuple(reversed(asc))
                if minimal_k(pref) != k:
                    continue
                tree = strict_tree_from_descending(pref, k)
                assert is_strict_descending_tree(tree, n, k)
                assert descending_from_strict_tree(tree, k) == pref


def test_strict_tree_from_non_strict_pref_rejected():
    with pytest.raises(ValueError):
        strict_tree_from_descending((4, 3, 2, 1), 1)
    with pytest.raises(ValueError):
        strict_tree_from_descending((1, 2), 0)  # not descending


def test_tree_text_grammar():
    assert format_tree(None) == "∅"
    assert format_tree((None, None)) == "(∅∅)"
    for m in range(0, 7):
        for b in iter_trees(m):
            assert parse_tree(format_tree(b)) == b
    t = ((), ((), ()))
    assert parse_full_tree(format_full_tree(t)) == t
    with pytest.raises(ValueError):
        parse_tree("(∅")
    with pytest.raises(ValueError):
        parse_tree("x")
