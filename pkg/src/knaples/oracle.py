"""Brute-force enumeration of parking preferences.

Everything in this module is an exhaustive sweep driven only by the parking
simulation itself; none of the bijection code is imported, so a bug in a
bijection cannot bend these counts.  Streams are lexicographic and
deterministic.

Sweeps over every preference of length n grow as n^n and are capped at
n <= 7 by default; monotone sweeps (C(2n-1, n) items) are allowed up to
n <= 12.  Callers may pass an explicit cap (the CLI wires NAPLES_MAX_N
through here).
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterator

from .parking import is_k_naples, minimal_k, rearrangements_all_k_naples

SHAPES = ("all", "ascending", "descending")
PREDICATES = ("k-naples", "strictly-k-naples", "rearrangement-closed")
DEFAULT_CAPS = {"all": 7, "ascending": 12, "descending": 12}


def _cap_for(shape: str) -> int:
    env = os.environ.get("NAPLES_MAX_N")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"NAPLES_MAX_N={env!r} is not an integer") from None
    return DEFAULT_CAPS[shape]


@dataclass(frozen=True)
class EnumerationSpec:
    """A bounded sweep: shape of preferences, backup bound, and predicate."""

    n: int
    shape: str = "all"
    k: int = 0
    predicate: str | None = None
    max_n: int | None = None

    def validate(self) -> "EnumerationSpec":
        if self.shape not in SHAPES:
            raise ValueError(f"unknown shape {self.shape!r}")
        if self.predicate is not None and self.predicate not in PREDICATES:
            raise ValueError(f"unknown predicate {self.predicate!r}")
        if self.n < 0 or self.k < 0:
            raise ValueError("n and k must be nonnegative")
        cap = self.max_n if self.max_n is not None else _cap_for(self.shape)
        if self.n > cap:
            raise ValueError(f"n={self.n} exceeds the cap {cap} "
                             f"for shape {self.shape!r}")
        return self


def iter_preferences(n: int, shape: str = "all",
                     max_n: int | None = None) -> Iterator[tuple[int, ...]]:
    """All preferences of length n with the given shape, lexicographically."""
    EnumerationSpec(n, shape, max_n=max_n).validate()
    if n == 0:
        yield ()
        return
    values = range(1, n + 1)
    if shape == "all":
        yield from itertools.product(values, repeat=n)
    elif shape == "ascending":
        yield from itertools.combinations_with_replacement(values, n)
    else:
        yield from _descending(n, n)


def _descending(n: int, bound: int) -> Iterator[tuple[int, ...]]:
    # lexicographic: smaller first entries first, each entry <= its left one
    if n == 0:
        yield ()
        return
    for first in range(1, bound + 1):
        for rest in _descending(n - 1, first):
            yield (first,) + rest


def _passes(pref: tuple[int, ...], spec: EnumerationSpec) -> bool:
    if spec.predicate is None:
        return True
    if spec.predicate == "k-naples":
        return is_k_naples(pref, spec.k)
    if spec.predicate == "strictly-k-naples":
        if not pref:
            return False
        return minimal_k(pref) == spec.k
    return rearrangements_all_k_naples(pref, spec.k)


def enumerate_preferences(spec: EnumerationSpec) -> Iterator[tuple[int, ...]]:
    """Stream the preferences of `spec` that satisfy its predicate."""
    spec.validate()
    for pref in iter_preferences(spec.n, spec.shape, spec.max_n):
        if _passes(pref, spec):
            yield pref


def brute_count(spec: EnumerationSpec) -> int:
    """Count the stream of `spec`, by direct simulation only."""
    return sum(1 for _ in enumerate_preferences(spec))


def distinct_rearrangements(pref: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Distinct permutations of a multiset, without the n! blowup.

    Standard lexicographic next-permutation walk starting from the sorted
    arrangement; each distinct rearrangement appears exactly once.
    """
    items = sorted(pref)
    n = len(items)
    yield tuple(items)
    if n < 2:
        return
    while True:
        i = n - 2
        while i >= 0 and items[i] >= items[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while items[j] <= items[i]:
            j -= 1
        items[i], items[j] = items[j], items[i]
        items[i + 1:] = reversed(items[i + 1:])
        yield tuple(items)
