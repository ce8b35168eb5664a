"""Exhaustive desk-scale verification of the library's theorems.

Each registered check sweeps every object up to a size bound, compares an
implemented formula or bijection against the brute-force oracle, and
reports counterexamples (expected: none).  The registry backs the CLI
`verify` subcommand; reports are deterministic, with counterexamples
listed in generation order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import catalan_objects as co
from . import counting, oracle, parking, paths, trees


@dataclass
class TheoremReport:
    theorem: str
    n_max: int
    k_max: int
    cases: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def note(self, text: str) -> None:
        if len(self.counterexamples) < 50:
            self.counterexamples.append(text)

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (f"{self.theorem:24s} n<={self.n_max} k<={self.k_max} "
                f"{verdict} ({self.cases} cases)")


def _check_rearrangements(rep: TheoremReport) -> None:
    # every rearrangement parks iff the ascending one does; sweeping the
    # distinct rearrangements of each multiset covers every preference once
    for n in range(0, rep.n_max + 1):
        for ascending in oracle.iter_preferences(n, "ascending"):
            rearr = list(oracle.distinct_rearrangements(ascending))
            for k in range(0, rep.k_max + 1):
                rep.cases += len(rearr)
                all_park = all(parking.is_k_naples(p, k) for p in rearr)
                claimed = parking.rearrangements_all_k_naples(ascending, k)
                if all_park != claimed:
                    rep.note(f"n={n} k={k} multiset={ascending}")


def _check_filled_modifications(rep: TheoremReport) -> None:
    # drop one parked car back to any earlier free spot: still parks
    for n in range(1, rep.n_max + 1):
        for pref in oracle.iter_preferences(n, "all"):
            for k in range(0, rep.k_max + 1):
                outcome = parking.park(pref, k)
                if not outcome.ok:
                    continue
                d = outcome.assignment
                for i in range(1, n + 1):
                    occupied = set(d[:i])
                    for l in range(1, i + 1):
                        for spot in range(1, d[l - 1]):
                            if spot in occupied:
                                continue
                            filled = list(d[:i])
                            filled[l - 1] = spot
                            rep.cases += 1
                            if not parking.park_filled(filled, pref[i:], k).ok:
                                rep.note(f"n={n} k={k} pref={pref} "
                                         f"i={i} l={l} spot={spot}")


def _check_path_criterion(rep: TheoremReport) -> None:
    for n in range(0, rep.n_max + 1):
        for pref in oracle.iter_preferences(n, "ascending"):
            word = paths.path_from_ascending_pref(pref)
            for k in range(0, rep.k_max + 1):
                rep.cases += 1
                if (paths.ascending_is_k_naples_path(word, k)
                        != parking.is_k_naples(pref, k)):
                    rep.note(f"n={n} k={k} pref={pref}")


def _check_embedding(rep: TheoremReport) -> None:
    for n in range(0, rep.n_max + 1):
        for k in range(0, rep.k_max + 1):
            count = 0
            for word in paths.iter_k_dyck_paths(n, k):
                rep.cases += 1
                count += 1
                big = paths.embed(word, k)
                if not paths.is_dyck_path(big):
                    rep.note(f"embed not Dyck: {word} k={k}")
                if big[:k] != "U" * k or (n and big[-(k + 1):] != "D" * (k + 1)):
                    rep.note(f"margins wrong: {word} k={k}")
                if paths.unembed(big, k) != word:
                    rep.note(f"round trip failed: {word} k={k}")
            if n >= 1:
                expected = counting.count_descending_total(n, k)
                if count != expected:
                    rep.note(f"path count n={n} k={k}: {count} != {expected}")


def _check_strictness(rep: TheoremReport) -> None:
    for n in range(1, rep.n_max + 1):
        for pref in oracle.iter_preferences(n, "descending"):
            word = paths.path_from_descending_pref(pref)
            need = parking.minimal_k(pref)
            for k in range(0, rep.k_max + 1):
                if not paths.is_k_dyck_path(word, k):
                    continue
                rep.cases += 1
                if paths.is_strictly_k(word, k) != (need == k):
                    rep.note(f"n={n} k={k} pref={pref}")


def _check_embedded_criterion(rep: TheoremReport) -> None:
    for n in range(1, rep.n_max + 1):
        for pref in oracle.iter_preferences(n, "ascending"):
            word = paths.path_from_ascending_pref(pref)
            for k in range(1, rep.k_max + 1):
                if not paths.is_k_dyck_path(word, k):
                    continue
                rep.cases += 1
                via_embed = paths.embedded_ascending_criterion(
                    paths.embed(word, k), k)
                if via_embed != paths.ascending_is_k_naples_path(word, k):
                    rep.note(f"n={n} k={k} pref={pref}")


def _check_strict_trees(rep: TheoremReport) -> None:
    for n in range(1, rep.n_max + 1):
        for k in range(0, rep.k_max + 1):
            matching = 0
            for tree in trees.iter_trees(n + k):
                rep.cases += 1
                if not trees.is_strict_descending_tree(tree, n, k):
                    continue
                matching += 1
                slots = trees.strict_tree_slots(tree, k)
                if sum(trees.tree_size(t) for t in slots) != n - k - 1:
                    rep.note(f"slot sizes n={n} k={k}")
                if trees.assemble_strict_tree(slots, k) != tree:
                    rep.note(f"slot round trip n={n} k={k}")
                pref = trees.descending_from_strict_tree(tree, k)
                if trees.strict_tree_from_descending(pref, k) != tree:
                    rep.note(f"pref round trip n={n} k={k} pref={pref}")
                if parking.minimal_k(pref) != k:
                    rep.note(f"pref not strictly k: n={n} k={k} pref={pref}")
            brute = oracle.brute_count(oracle.EnumerationSpec(
                n, "descending", k, "strictly-k-naples"))
            if matching != brute:
                rep.note(f"tree count n={n} k={k}: {matching} != {brute}")


def _check_strict_closed_form(rep: TheoremReport) -> None:
    for n in range(1, rep.n_max + 1):
        for k in range(0, rep.k_max + 1):
            rep.cases += 1
            brute = oracle.brute_count(oracle.EnumerationSpec(
                n, "descending", k, "strictly-k-naples"))
            if counting.count_descending_strict(n, k) != brute:
                rep.note(f"strict n={n} k={k}")


def _check_total_closed_form(rep: TheoremReport) -> None:
    for n in range(1, rep.n_max + 1):
        for k in range(0, rep.k_max + 1):
            rep.cases += 1
            brute = oracle.brute_count(oracle.EnumerationSpec(
                n, "descending", k, "k-naples"))
            if counting.count_descending_total(n, k) != brute:
                rep.note(f"total n={n} k={k}")


def _check_ascending_recurrence(rep: TheoremReport) -> None:
    for n in range(0, rep.n_max + 1):
        for k in range(0, rep.k_max + 1):
            rep.cases += 1
            both = [0, 0]
            for pref in oracle.iter_preferences(n, "ascending"):
                if parking.is_k_naples(pref, k):
                    both[0] += 1
                    if pref and pref[0] == 1:
                        both[1] += 1
            if counting.count_ascending(n, k) != both[0]:
                rep.note(f"I({n},{k}) != {both[0]}")
            if counting.count_ascending_starts_one(n, k) != both[1]:
                rep.note(f"U({n},{k}) != {both[1]}")


def _iter_set_partitions(m: int) -> Iterator[list[list[int]]]:
    # restricted-growth strings
    def extend(i: int, blocks: list[list[int]]) -> Iterator[list[list[int]]]:
        if i > m:
            yield [list(b) for b in blocks]
            return
        for b in blocks:
            b.append(i)
            yield from extend(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from extend(i + 1, blocks)
        blocks.pop()

    yield from extend(1, [])


def _check_dissections(rep: TheoremReport) -> None:
    for n in range(2, rep.n_max + 1):
        for k in range(1, rep.k_max + 1):
            if n <= k:
                continue
            s, r = n + k + 1, 2 * k + 2
            expected = counting.count_descending_strict(n, k)
            seen = set()
            for tree in trees.iter_trees(n + k):
                if not trees.is_strict_descending_tree(tree, n, k):
                    continue
                rep.cases += 1
                d = co.dissection_from_strict(tree, n, k)
                if co.strict_from_dissection(d, n, k) != tree:
                    rep.note(f"round trip n={n} k={k}")
                seen.add(d.diagonals)
            if len(seen) != expected:
                rep.note(f"injectivity n={n} k={k}: {len(seen)} != {expected}")
            # independent enumeration: every non-crossing diagonal set of
            # the right size whose faces are one r-gon (through vertex 0)
            # plus triangles
            chords = [(a, b) for a in range(s) for b in range(a + 2, s)
                      if not (a == 0 and b == s - 1)]
            direct = 0
            for combo in itertools.combinations(chords, s - r):
                try:
                    co.Dissection(s, r, frozenset(combo)).validate()
                except ValueError:
                    continue
                direct += 1
            if direct != expected:
                rep.note(f"enumeration n={n} k={k}: {direct} != {expected}")


def _check_ncps(rep: TheoremReport) -> None:
    for n in range(1, rep.n_max + 1):
        for k in range(0, rep.k_max + 1):
            if n <= k:
                continue
            m, r = n + k + 1, 2 * k + 2
            expected = counting.count_descending_strict(n, k)
            seen = set()
            for tree in trees.iter_trees(n + k):
                if not trees.is_strict_descending_tree(tree, n, k):
                    continue
                rep.cases += 1
                p = co.ncp_from_strict(tree, n, k)
                if co.strict_from_ncp(p, n, k) != tree:
                    rep.note(f"round trip n={n} k={k}")
                seen.add(p.blocks)
            if len(seen) != expected:
                rep.note(f"injectivity n={n} k={k}: {len(seen)} != {expected}")
            direct = 0
            for blocks in _iter_set_partitions(m):
                root = next(b for b in blocks if 1 in b)
                if len(root) != r:
                    continue
                if co.is_noncrossing([frozenset(b) for b in blocks], m):
                    direct += 1
            if direct != expected:
                rep.note(f"enumeration n={n} k={k}: {direct} != {expected}")


def _check_height_lemmas(rep: TheoremReport) -> None:
    for m in range(1, rep.n_max + 1):
        for tree in trees.iter_trees(m):
            rep.cases += 1
            if not trees.check_traversal_heights(tree):
                rep.note(f"tree {trees.format_tree(tree)}")


def _check_tree_criterion(rep: TheoremReport) -> None:
    # the closing description of ascending trees, against the simulator
    for n in range(1, rep.n_max + 1):
        for pref in oracle.iter_preferences(n, "ascending"):
            word = paths.path_from_ascending_pref(pref)
            for k in range(1, rep.k_max + 1):
                if not paths.is_k_dyck_path(word, k):
                    continue
                rep.cases += 1
                tree = trees.tree_from_dyck(paths.embed(word, k))
                if (trees.ascending_tree_criterion(tree, k)
                        != parking.is_k_naples(pref, k)):
                    rep.note(f"n={n} k={k} pref={pref}")


_REGISTRY: dict[str, tuple[Callable[[TheoremReport], None], int, int]] = {
    "Thm2.3": (_check_rearrangements, 5, 3),
    "Lem2.2": (_check_filled_modifications, 5, 2),
    "Thm3.3": (_check_path_criterion, 7, 3),
    "Prop3.4": (_check_embedding, 7, 3),
    "Prop3.7": (_check_strictness, 7, 3),
    "Cor3.8": (_check_embedded_criterion, 7, 3),
    "Prop4.11": (_check_strict_trees, 6, 2),
    "Lem4.8": (_check_height_lemmas, 8, 0),
    "Sec4-ascending-trees": (_check_tree_criterion, 6, 3),
    "Thm5.2": (_check_ascending_recurrence, 7, 4),
    "Thm5.13": (_check_strict_closed_form, 7, 4),
    "Cor5.16": (_check_total_closed_form, 7, 4),
    "Thm6.3": (_check_dissections, 6, 2),
    "Thm6.4": (_check_ncps, 6, 2),
}


def theorem_ids() -> list[str]:
    return list(_REGISTRY)


def check_theorem(theorem: str, n_max: int | None = None,
                  k_max: int | None = None) -> TheoremReport:
    """Run one registered check at the given (or default) scale."""
    if theorem not in _REGISTRY:
        raise ValueError(f"unknown theorem id {theorem!r}; "
                         f"known: {', '.join(_REGISTRY)}")
    func, default_n, default_k = _REGISTRY[theorem]
    rep = TheoremReport(theorem,
                        default_n if n_max is None else n_max,
                        default_k if k_max is None else k_max)
    func(rep)
    return rep


def check_all(n_max: int | None = None,
              k_max: int | None = None) -> list[TheoremReport]:
    return [check_theorem(name, n_max, k_max) for name in _REGISTRY]
