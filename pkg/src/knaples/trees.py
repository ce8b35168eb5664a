"""Binary trees, full binary trees, and their Dyck-path correspondence.

A binary tree is either None (empty) or a pair `(left, right)` of binary
trees; a full binary tree is either `()` (a single leaf vertex) or a pair
`(left, right)` of full binary trees.  Both are plain nested tuples, so
values are immutable, hashable, and compare structurally.

The recursive word of a full tree T with subtrees T1, T2 is
U word(T1) D word(T2), the empty word for a lone leaf.  Pruning the leaves
of a full tree with 2n+1 vertices gives a binary tree with n vertices, and
the composite map sends binary trees with n nodes to Dyck paths of length n.
Under it each node owns one U step (its first traversal) and one D step
(the step after its left subtree is finished); the height lemmas checked by
`check_traversal_heights` are statements about those two steps.

Nodes are addressed positionally by strings of 'L'/'R' moves from the root
("" is the root); trees carry no labels.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .paths import (DOWN, UP, descending_pref_from_path, embed, heights,
                    is_dyck_path, max_deficit, path_from_descending_pref,
                    reflect_after_first_return, unembed)

FULL_LEAF = ()


def tree_size(b) -> int:
    """Number of nodes of a binary tree."""
    return 0 if b is None else 1 + tree_size(b[0]) + tree_size(b[1])


def full_size(t) -> int:
    """Number of vertices of a full binary tree."""
    return 1 if t == FULL_LEAF else 1 + full_size(t[0]) + full_size(t[1])


def is_binary_tree(b) -> bool:
    if b is None:
        return True
    return (isinstance(b, tuple) and len(b) == 2
            and is_binary_tree(b[0]) and is_binary_tree(b[1]))


def is_full_tree(t) -> bool:
    if t == FULL_LEAF:
        return True
    return (isinstance(t, tuple) and len(t) == 2
            and is_full_tree(t[0]) and is_full_tree(t[1]))


# -- Dyck-path bijection (full trees) and leaf pruning ----------------------

def dyck_from_full_tree(t) -> str:
    """word(T) = U word(T1) D word(T2); a lone leaf gives the empty word."""
    if t == FULL_LEAF:
        return ""
    return UP + dyck_from_full_tree(t[0]) + DOWN + dyck_from_full_tree(t[1])


def full_tree_from_dyck(word: str):
    """Inverse of `dyck_from_full_tree`."""
    if not is_dyck_path(word):
        raise ValueError(f"not a Dyck path: {word!r}")

    def parse(lo: int, hi: int):
        if lo == hi:
            return FULL_LEAF
        h = 0
        for t in range(lo, hi):
            h += 1 if word[t] == UP else -1
            if h == 0:
                return (parse(lo + 1, t), parse(t + 1, hi))
        raise AssertionError("balanced word must return to 0")

    return parse(0, len(word))


def prune(t):
    """Remove the leaves of a full tree; a lone leaf becomes the empty tree."""
    if t == FULL_LEAF:
        return None
    return (prune(t[0]), prune(t[1]))


def graft(b):
    """Add leaves until every original node has two children (inverse of prune)."""
    if b is None:
        return FULL_LEAF
    return (graft(b[0]), graft(b[1]))


def dyck_from_tree(b) -> str:
    """Dyck path of length n for a binary tree with n nodes."""
    return dyck_from_full_tree(graft(b))


def tree_from_dyck(word: str):
    return prune(full_tree_from_dyck(word))


# -- node addresses, depth, traversal ----------------------------------------

def node_at(b, address: str):
    sub = b
    for move in address:
        if sub is None or move not in "LR":
            raise ValueError(f"no node at address {address!r}")
        sub = sub[0] if move == "L" else sub[1]
    if sub is None:
        raise ValueError(f"no node at address {address!r}")
    return sub


def all_addresses(b) -> list[str]:
    """Addresses of every node, in prefix (root, left, right) order."""
    out: list[str] = []

    def walk(sub, addr: str) -> None:
        if sub is None:
            return
        out.append(addr)
        walk(sub[0], addr + "L")
        walk(sub[1], addr + "R")

    walk(b, "")
    return out


def diagonal_depth(b, address: str) -> int:
    """Number of left edges on the root-to-node path."""
    node_at(b, address)
    return address.count("L")


def traversal(b) -> list[str]:
    """Visit sequence of the counterclockwise walk using each edge twice.

    Leaves appear twice in a row, nodes with one child twice (before and
    after their single excursion), nodes with two children three times.  A
    one-node tree is the trivial walk [""].
    """
    if b is None:
        raise ValueError("cannot traverse the empty tree")
    if b == (None, None):
        return [""]

    def walk(sub, addr: str) -> list[str]:
        left, right = sub
        if left is None and right is None:
            return [addr, addr]
        if right is None:
            return [addr] + walk(left, addr + "L") + [addr]
        if left is None:
            return [addr] + walk(right, addr + "R") + [addr]
        return ([addr] + walk(left, addr + "L") + [addr]
                + walk(right, addr + "R") + [addr])

    return walk(b, "")


def _step_indices(b) -> dict[str, tuple[int, int, int]]:
    """Map address -> (up_step, down_step, subtree_end) in the tree's word.

    `up_step` is the 1-based step of the node's U (its first traversal),
    `down_step` the step of its D (its second), `subtree_end` the last step
    of its subtree's word.
    """
    steps: dict[str, tuple[int, int, int]] = {}

    def walk(sub, addr: str, offset: int) -> int:
        # returns the number of steps of this subtree's word
        if sub is None:
            return 0
        left_len = walk(sub[0], addr + "L", offset + 1)
        down = offset + 1 + left_len + 1
        right_len = walk(sub[1], addr + "R", down)
        total = 2 + left_len + right_len
        steps[addr] = (offset + 1, down, offset + total)
        return total

    walk(b, "", 0)
    return steps


def check_traversal_heights(b) -> bool:
    """Validate the four height statements tying a tree to its Dyck path.

    With h the prefix heights of the tree's word and (u, d, e) each node's
    U step, D step and subtree end:

    * the height before a node's first traversal equals the height after
      any later traversal of it: h[u-1] == h[d] == h[e];
    * a node and its right child are first traversed at the same height:
      h[u-1] == h[u'-1];
    * the path returns to 0 exactly at its last step and right before the
      first traversal of each direct right descendant of the root;
    * the height before a node's first traversal is its diagonal depth.
    """
    if b is None:
        raise ValueError("cannot check the empty tree")
    word = dyck_from_tree(b)
    hs = heights(word)
    steps = _step_indices(b)
    for addr, (u, d, e) in steps.items():
        if not hs[u - 1] == hs[d] == hs[e]:
            return False
        if hs[u - 1] != addr.count("L"):
            return False
        sub = node_at(b, addr)
        if sub[1] is not None:
            if hs[u - 1] != hs[steps[addr + "R"][0] - 1]:
                return False
    returns = {t for t in range(1, len(word) + 1) if hs[t] == 0}
    spine_starts = {len(word)}
    addr = "R"
    while addr in steps:
        spine_starts.add(steps[addr][0] - 1)
        addr += "R"
    return returns == spine_starts


def ascending_tree_criterion(b, k: int) -> bool:
    """Ascending k-Naples test on a tree in embedded (n+k node) form.

    Whenever a node of diagonal depth k-1 is traversed the second time (its
    D step drops the path below height k), one of the nodes traversed for
    the first or second time within the next 2k steps must have diagonal
    depth k.  D steps among the last k+1 are exempt, mirroring the embedded
    path criterion.
    """
    if b is None or k < 1:
        raise ValueError("requires a nonempty tree and k >= 1")
    steps = _step_indices(b)
    two_n = 2 * tree_size(b)
    witness = set()
    crossings = []
    for addr, (u, d, _) in steps.items():
        depth = addr.count("L")
        if depth == k:
            witness.add(u)
            witness.add(d)
        elif depth == k - 1 and d <= two_n - (k + 1):
            crossings.append(d)
    for s in crossings:
        if not any(s < t <= s + 2 * k for t in witness):
            return False
    return True


# -- strict descending trees and their slot decomposition --------------------

def _left_chain(b, length: int):
    """Follow `length` left edges from `b`; None if the chain is too short."""
    sub = b
    for _ in range(length):
        if sub is None:
            return None
        sub = sub[0]
    return sub


def is_strict_descending_tree(b, n: int, k: int) -> bool:
    """Shape test for trees of descending strictly k-Naples functions.

    For k >= 1: the tree has n+k nodes, the root starts a chain of at least
    k-1 left children, has a right child, and that right child starts a
    chain of at least k left children.  For k = 0 the bijection is the plain
    Dyck-path correspondence, so any tree with n nodes qualifies.
    """
    if not is_binary_tree(b):
        return False
    if tree_size(b) != n + k:
        return False
    if k == 0:
        return n >= 1 and b is not None
    if b is None:
        return False
    if _left_chain(b, k - 1) is None:
        return False
    if b[1] is None:
        return False
    return _left_chain(b[1], k) is not None


def _slot_addresses(k: int) -> list[str]:
    """Slot positions of the spine, in canonical left-to-right order.

    The spine is the root, its k-1 left descendants L1..L(k-1), the root's
    right child R0, and R0's k left descendants R1..Rk.  Reading the planar
    drawing left to right the free places are L(k-1).left, then the right
    places of L(k-1)..L1, then Rk.left, then the right places of Rk..R0.
    For k = 0 the spine is the root alone and the places are its two child
    slots.
    """
    if k == 0:
        return ["L", "R"]
    left_chain = ["L" * (k - 1) + "L"]
    left_chain += ["L" * i + "R" for i in range(k - 1, 0, -1)]
    right_chain = ["R" + "L" * k + "L"]
    right_chain += ["R" + "L" * i + "R" for i in range(k, -1, -1)]
    return left_chain + right_chain


def strict_tree_slots(b, k: int) -> list:
    """The 2k+2 subtrees hanging off the spine, left to right.

    Their sizes sum to n-k-1, and the map to (2k+2)-tuples of binary trees
    is a bijection on strict descending trees.
    """
    n = tree_size(b) - k
    if not is_strict_descending_tree(b, n, k):
        raise ValueError(f"tree is not strict descending for k={k}")

    def subtree(addr: str):
        sub = b
        for move in addr:
            sub = sub[0] if move == "L" else sub[1]
        return sub

    return [subtree(addr) for addr in _slot_addresses(k)]


def assemble_strict_tree(slots: Sequence, k: int):
    """Rebuild the strict descending tree with the given slot subtrees."""
    slots = list(slots)
    if len(slots) != 2 * k + 2:
        raise ValueError(f"expected {2 * k + 2} slots, got {len(slots)}")
    if k == 0:
        return (slots[0], slots[1])
    # right chain bottom-up: Rk carries slots[k] and slots[k+1], then each
    # parent up to R0 takes the next slot as its right child
    rnode = (slots[k], slots[k + 1])
    for i in range(k + 2, 2 * k + 2):
        rnode = (rnode, slots[i])
    if k == 1:
        return (slots[0], rnode)
    # left chain bottom-up: L(k-1) carries slots[0] and slots[1]
    lnode = (slots[0], slots[1])
    for i in range(2, k):
        lnode = (lnode, slots[i])
    return (lnode, rnode)


def strict_tree_from_descending(pref: Sequence[int], k: int):
    """Strict descending k-Naples preference -> its Prop-4.11 binary tree.

    Route: preference -> k-Dyck path -> embedded Dyck path -> reflection
    after the first return -> tree.  For k = 0 the embedding and reflection
    are skipped (the plain path correspondence is already the bijection).
    """
    pref = tuple(pref)
    if not pref:
        raise ValueError("preference must be nonempty")
    if list(pref) != sorted(pref, reverse=True):
        raise ValueError("preference must be weakly decreasing")
    word = path_from_descending_pref(pref)
    if max_deficit(word) != k:
        raise ValueError(f"preference is not strictly {k}-Naples")
    if k == 0:
        return tree_from_dyck(word)
    reflected = reflect_after_first_return(embed(word, k), k)
    return tree_from_dyck(reflected)


def descending_from_strict_tree(b, k: int) -> tuple[int, ...]:
    """Inverse of `strict_tree_from_descending`."""
    n = tree_size(b) - k
    if not is_strict_descending_tree(b, n, k):
        raise ValueError(f"tree is not strict descending for k={k}")
    word = dyck_from_tree(b)
    if k == 0:
        return descending_pref_from_path(word)
    embedded = reflect_after_first_return(word, k)
    return descending_pref_from_path(unembed(embedded, k))


# -- exhaustive generation and serialization ---------------------------------

@lru_cache(maxsize=None)
def _trees_of_size(m: int) -> tuple:
    if m == 0:
        return (None,)
    out = []
    for a in range(m):
        for left in _trees_of_size(a):
            for right in _trees_of_size(m - 1 - a):
                out.append((left, right))
    return tuple(out)


def iter_trees(m: int) -> Iterator:
    """All binary trees with m nodes (Catalan(m) of them)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return iter(_trees_of_size(m))


EMPTY_MARK = "∅"  # ∅


def format_tree(b) -> str:
    """Nested-parentheses text form: TREE := "∅" | "(" TREE TREE ")"."""
    if b is None:
        return EMPTY_MARK
    return f"({format_tree(b[0])}{format_tree(b[1])})"


def parse_tree(text: str):
    tree, rest = _parse_tree_prefix(text)
    if rest:
        raise ValueError(f"trailing characters in tree literal: {rest!r}")
    return tree


def _parse_tree_prefix(text: str):
    if text.startswith(EMPTY_MARK):
        return None, text[len(EMPTY_MARK):]
    if text.startswith("("):
        left, rest = _parse_tree_prefix(text[1:])
        right, rest = _parse_tree_prefix(rest)
        if not rest.startswith(")"):
            raise ValueError("unbalanced parentheses in tree literal")
        return (left, right), rest[1:]
    raise ValueError(f"malformed tree literal at {text[:10]!r}")


def format_full_tree(t) -> str:
    """Same grammar as binary trees, with "∅" standing for a leaf vertex."""
    if t == FULL_LEAF:
        return EMPTY_MARK
    return f"({format_full_tree(t[0])}{format_full_tree(t[1])})"


def parse_full_tree(text: str):
    def convert(b):
        return FULL_LEAF if b is None else (convert(b[0]), convert(b[1]))

    return convert(parse_tree(text))
