"""Polygon dissections and rooted non-crossing partitions for strict trees.

A descending strictly k-Naples parking function of length n decomposes,
through its binary tree, into 2k+2 slot subtrees whose sizes sum to
n-k-1.  Feeding each slot through the classical tree correspondences yields

* a dissection of an (n+k+1)-gon into one (2k+2)-gon and triangles, and
* a (2k+2)-rooted non-crossing partition of [n+k+1] with 1 in the root.

Conventions frozen here (and by the golden files in the test suite):

* Dissections: polygon vertices are 0..s-1 clockwise; vertex 0 always lies
  on the central (2k+2)-gon; slot subtrees fill the boundary gaps between
  consecutive central vertices, read clockwise starting at vertex 0.  The
  central edge closing the cycle back to vertex 0 plays the role of the
  distinguished edge; when its gap is empty it is the boundary edge
  (0, s-1).  Each gap is triangulated by the rule: a tree (L, R) on arc
  v_0..v_{m+1} puts the triangle (v_0, v_{a+1}, v_{m+1}) on the base edge,
  a = |L|, and recurses on the two sub-arcs.  Dissections need k >= 1;
  at k = 0 the central face would be a doubled edge, not a polygon.

* Partitions: the root block is built from element 1 by stepping over the
  slot sizes (next root element = previous + slot size + 1, wrapping after
  the last root element); each gap of consecutive elements is partitioned
  by writing the slot tree's Dyck word and popping a block of size j
  whenever a run of j down steps closes at element i (the block's largest
  element).  Partitions are fine at k = 0, where the root is a 2-block.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .trees import (assemble_strict_tree, dyck_from_tree,
                    is_strict_descending_tree, strict_tree_slots,
                    tree_from_dyck, tree_size)
from .paths import UP


# -- non-crossing machinery ---------------------------------------------------

def is_noncrossing(blocks, m: int) -> bool:
    """Stack test: no a < b < c < d with a,c and b,d in different blocks."""
    owner = {}
    for idx, block in enumerate(blocks):
        for x in block:
            owner[x] = idx
    last = {idx: max(block) for idx, block in enumerate(blocks)}
    stack: list[int] = []
    for i in range(1, m + 1):
        idx = owner[i]
        if stack and stack[-1] == idx:
            pass
        elif idx in stack:
            return False
        else:
            stack.append(idx)
        while stack and last[stack[-1]] == i:
            stack.pop()
    return True


@dataclass(frozen=True)
class RootedNonCrossingPartition:
    """Non-crossing partition of {1..m} with a distinguished root block."""

    m: int
    blocks: tuple[frozenset[int], ...]
    root: frozenset[int]

    def validate(self) -> "RootedNonCrossingPartition":
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise ValueError("empty block")
            if block & seen:
                raise ValueError("blocks overlap")
            seen |= block
        if seen != set(range(1, self.m + 1)):
            raise ValueError(f"blocks do not partition 1..{self.m}")
        if self.root not in self.blocks:
            raise ValueError("root is not one of the blocks")
        if 1 not in self.root:
            raise ValueError("element 1 must lie in the root block")
        if not is_noncrossing(self.blocks, self.m):
            raise ValueError("partition has crossing blocks")
        return self


def _canonical_blocks(blocks) -> tuple[frozenset[int], ...]:
    return tuple(sorted((frozenset(b) for b in blocks), key=min))


def make_ncp(m: int, blocks, root) -> RootedNonCrossingPartition:
    return RootedNonCrossingPartition(m, _canonical_blocks(blocks),
                                      frozenset(root)).validate()


@dataclass(frozen=True)
class Dissection:
    """Dissection of an s-gon into one r-gon and s-r triangles."""

    s: int
    r: int
    diagonals: frozenset[tuple[int, int]]

    def validate(self) -> "Dissection":
        for a, b in self.diagonals:
            if not (0 <= a < b <= self.s - 1):
                raise ValueError(f"bad diagonal ({a},{b})")
            if b - a == 1 or (a == 0 and b == self.s - 1):
                raise ValueError(f"({a},{b}) is a boundary edge, not a diagonal")
        if len(self.diagonals) != self.s - self.r:
            raise ValueError("wrong number of diagonals for the face structure")
        for (a, b) in self.diagonals:
            for (c, d) in self.diagonals:
                if a < c < b < d or c < a < d < b:
                    raise ValueError(f"diagonals ({a},{b}) and ({c},{d}) cross")
        sizes = sorted(len(f) for f in dissection_faces(self.s, self.diagonals))
        want = [3] * (self.s - self.r) + [self.r]
        if sizes != sorted(want):
            raise ValueError("faces are not one r-gon plus triangles")
        if 0 not in self.central_face():
            raise ValueError("not canonical: vertex 0 must lie on the r-gon")
        return self

    def central_face(self) -> tuple[int, ...]:
        for face in dissection_faces(self.s, self.diagonals):
            if len(face) == self.r:
                return face
        raise ValueError("no r-gon face")


def dissection_faces(s: int, diagonals) -> list[tuple[int, ...]]:
    """Interior faces of the polygon split by pairwise non-crossing chords.

    Traces the combinatorial map of the convex-position graph: incident
    edges at each vertex are ordered by the circular position of the far
    endpoint, and from a directed edge (u, v) the face continues along the
    neighbor preceding u in the rotation at v.  Every face is traced once;
    the outer face is the one walking boundary edge {0, 1} from 1 to 0.
    """
    if s < 3:
        raise ValueError("polygon needs at least 3 vertices")
    arcs = {(i, (i + 1) % s) for i in range(s)}
    arcs |= {(a, b) for a, b in diagonals}
    arcs |= {(b, a) for a, b in arcs}
    neigh: dict[int, list[int]] = {v: [] for v in range(s)}
    for a, b in arcs:
        if b not in neigh[a]:
            neigh[a].append(b)
    for v in neigh:
        neigh[v].sort(key=lambda w: (w - v) % s)
    faces = []
    outer_index = -1
    seen: set[tuple[int, int]] = set()
    for start in sorted(arcs):
        if start in seen:
            continue
        face = []
        u, v = start
        while (u, v) not in seen:
            seen.add((u, v))
            if (u, v) == (1, 0):
                outer_index = len(faces)
            face.append(u)
            ring = neigh[v]
            u, v = v, ring[(ring.index(u) - 1) % len(ring)]
        faces.append(tuple(face))
    return [f for i, f in enumerate(faces) if i != outer_index]


# -- classical per-slot building blocks --------------------------------------

def _add_chord(p: int, q: int, s: int, out: set[tuple[int, int]]) -> None:
    """Record (p, q) as a diagonal unless the vertices are boundary-adjacent."""
    if (q - p) % s not in (1, s - 1):
        out.add((min(p, q), max(p, q)))


def _triangulate(tree, arc: list[int], s: int,
                 out: set[tuple[int, int]]) -> None:
    """Triangulation of the polygon on `arc` with base (arc[0], arc[-1])."""
    if tree is None:
        return
    a = tree_size(tree[0])
    apex = arc[a + 1]
    _add_chord(arc[0], apex, s, out)
    _add_chord(apex, arc[-1], s, out)
    _triangulate(tree[0], arc[:a + 2], s, out)
    _triangulate(tree[1], arc[a + 1:], s, out)


def _connected(p: int, q: int, s: int, diagonals) -> bool:
    if (q - p) % s in (1, s - 1):
        return True
    return (min(p, q), max(p, q)) in diagonals


def _tree_from_arc(arc: list[int], s: int,
                   diagonals: frozenset[tuple[int, int]]):
    """Inverse of `_triangulate` on the sub-polygon spanned by `arc`."""
    if len(arc) == 2:
        return None
    for idx in range(1, len(arc) - 1):
        apex = arc[idx]
        if _connected(arc[0], apex, s, diagonals) and \
                _connected(apex, arc[-1], s, diagonals):
            return (_tree_from_arc(arc[:idx + 1], s, diagonals),
                    _tree_from_arc(arc[idx:], s, diagonals))
    raise ValueError("arc is not triangulated")


def _ncp_blocks_from_tree(tree, elements: list[int]) -> list[frozenset[int]]:
    """Blocks of the non-crossing partition of `elements` for `tree`.

    Reads the tree's Dyck word: the i-th U opens element i, a run of j D's
    after it closes the block formed by the top j open elements (so the
    block's largest element is i).
    """
    word = dyck_from_tree(tree)
    blocks: list[frozenset[int]] = []
    stack: list[int] = []
    pos = 0
    t = 0
    while t < len(word):
        if word[t] == UP:
            stack.append(elements[pos])
            pos += 1
            t += 1
        else:
            run = 0
            while t < len(word) and word[t] != UP:
                run += 1
                t += 1
            blocks.append(frozenset(stack[-run:]))
            del stack[-run:]
    return blocks


def _tree_from_ncp_blocks(blocks, elements: list[int]):
    """Inverse of `_ncp_blocks_from_tree`."""
    if not elements:
        return None
    closing: dict[int, int] = {}
    for block in blocks:
        closing[max(block)] = len(block)
    word = []
    open_count = 0
    for x in elements:
        word.append(UP)
        open_count += 1
        if x in closing:
            run = closing[x]
            if run > open_count:
                raise ValueError("blocks do not nest inside the gap")
            word.append("D" * run)
            open_count -= run
    if open_count:
        raise ValueError("blocks do not cover the gap")
    return tree_from_dyck("".join(word))


# -- the strict bijections ----------------------------------------------------

def _slot_layout(b, n: int, k: int) -> tuple[list, list[int]]:
    if not is_strict_descending_tree(b, n, k):
        raise ValueError(f"tree is not strict descending for n={n}, k={k}")
    slots = strict_tree_slots(b, k)
    sizes = [tree_size(t) for t in slots]
    return slots, sizes


def dissection_from_strict(b, n: int, k: int) -> Dissection:
    """Strict descending tree -> (2k+2)-in-(n+k+1) dissection."""
    if k < 1:
        raise ValueError("dissections require k >= 1")
    slots, sizes = _slot_layout(b, n, k)
    s = n + k + 1
    r = 2 * k + 2
    q = [0]
    for size in sizes[:-1]:
        q.append(q[-1] + size + 1)
    diagonals: set[tuple[int, int]] = set()
    for i in range(r):
        lo = q[i]
        hi = q[i + 1] if i + 1 < r else s  # s stands for vertex 0 (wrap)
        _add_chord(lo, hi % s, s, diagonals)
        arc = list(range(lo, hi)) + [hi % s]
        _triangulate(slots[i], arc, s, diagonals)
    return Dissection(s, r, frozenset(diagonals)).validate()


def strict_from_dissection(d: Dissection, n: int, k: int):
    """Inverse of `dissection_from_strict`."""
    if k < 1:
        raise ValueError("dissections require k >= 1")
    d.validate()
    if d.s != n + k + 1 or d.r != 2 * k + 2:
        raise ValueError(f"expected a {2*k+2}-in-{n+k+1} dissection")
    central = sorted(d.central_face())
    if central[0] != 0:
        raise ValueError("not canonical: vertex 0 must lie on the r-gon")
    slots = []
    for i, lo in enumerate(central):
        hi = central[i + 1] if i + 1 < len(central) else d.s
        arc = list(range(lo, hi)) + [hi % d.s]
        slots.append(_tree_from_arc(arc, d.s, d.diagonals))
    return assemble_strict_tree(slots, k)


def ncp_from_strict(b, n: int, k: int) -> RootedNonCrossingPartition:
    """Strict descending tree -> (2k+2)-rooted NCP of [n+k+1] with 1 rooted."""
    slots, sizes = _slot_layout(b, n, k)
    m = n + k + 1
    root = [1]
    for size in sizes[:-1]:
        root.append(root[-1] + size + 1)
    blocks: list[frozenset[int]] = [frozenset(root)]
    for i, slot in enumerate(slots):
        lo = root[i] + 1
        hi = root[i + 1] if i + 1 < len(root) else m + 1
        blocks.extend(_ncp_blocks_from_tree(slot, list(range(lo, hi))))
    return make_ncp(m, blocks, root)


def strict_from_ncp(p: RootedNonCrossingPartition, n: int, k: int):
    """Inverse of `ncp_from_strict`."""
    p.validate()
    if p.m != n + k + 1:
        raise ValueError(f"expected a partition of [{n + k + 1}]")
    if len(p.root) != 2 * k + 2:
        raise ValueError(f"root block must have size {2 * k + 2}")
    root = sorted(p.root)
    gaps = []
    for i, e in enumerate(root):
        nxt = root[i + 1] if i + 1 < len(root) else p.m + 1
        gaps.append(list(range(e + 1, nxt)))
    by_gap: list[list[frozenset[int]]] = [[] for _ in gaps]
    for block in p.blocks:
        if block == p.root:
            continue
        for i, gap in enumerate(gaps):
            if min(block) in gap:
                if not block <= set(gap):
                    raise ValueError("block escapes its root gap")
                by_gap[i].append(block)
                break
    slots = [_tree_from_ncp_blocks(by_gap[i], gaps[i])
             for i in range(len(gaps))]
    return assemble_strict_tree(slots, k)


# -- text forms ---------------------------------------------------------------

def format_dissection(d: Dissection) -> str:
    body = ",".join(f"({a},{b})" for a, b in sorted(d.diagonals))
    return f"s={d.s};r={d.r};diag={body}"


def parse_dissection(text: str) -> Dissection:
    m = re.fullmatch(r"s=(\d+);r=(\d+);diag=((?:\(\d+,\d+\))?(?:,\(\d+,\d+\))*)",
                     text.strip())
    if not m:
        raise ValueError(f"malformed dissection literal {text!r}")
    s, r = int(m.group(1)), int(m.group(2))
    diagonals = {(int(a), int(b))
                 for a, b in re.findall(r"\((\d+),(\d+)\)", m.group(3))}
    return Dissection(s, r, frozenset(diagonals)).validate()


def format_ncp(p: RootedNonCrossingPartition) -> str:
    root = "{" + ",".join(str(x) for x in sorted(p.root)) + "}"
    rest = [b for b in p.blocks if b != p.root]
    body = ",".join("{" + ",".join(str(x) for x in sorted(b)) + "}"
                    for b in rest)
    return f"root={root};blocks={body}"


def parse_ncp(text: str) -> RootedNonCrossingPartition:
    m = re.fullmatch(r"root=\{([\d,]+)\};blocks=((?:\{[\d,]+\})?(?:,\{[\d,]+\})*)",
                     text.strip())
    if not m:
        raise ValueError(f"malformed partition literal {text!r}")
    root = frozenset(int(x) for x in m.group(1).split(","))
    blocks = [root]
    for part in re.findall(r"\{([\d,]+)\}", m.group(2)):
        blocks.append(frozenset(int(x) for x in part.split(",")))
    elements = set().union(*blocks)
    return make_ncp(max(elements), blocks, root)
