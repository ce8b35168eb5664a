"""Dyck paths, k-Dyck paths, and their parking-preference correspondence.

A path is a word over {U, D}, stored as a plain string.  Height after t
steps is #U - #D over the first t letters.  A Dyck path of length n has n
U's, n D's and never dips below height 0; a k-Dyck path may dip to height
-k and must end with a D step (when nonempty).  The length of either is its
number of U steps.

A k-Dyck path corresponds to the weakly increasing preference whose i-th
entry is one plus the number of D steps before the i-th U step; reversing
that preference gives the descending k-Naples parking function attached to
the path.  This module is purely geometric: nothing here runs the parking
simulation, which is what lets the test suite play the two against each
other.
"""

from __future__ import annotations

from typing import Iterator, Sequence

UP = "U"
DOWN = "D"


def validate_step_word(word: str) -> str:
    for ch in word:
        if ch not in "UD":
            raise ValueError(f"step word may contain only U and D, got {ch!r}")
    return word


def heights(word: str) -> list[int]:
    """Prefix heights h[0..len(word)], with h[0] = 0."""
    hs = [0]
    h = 0
    for ch in word:
        h += 1 if ch == UP else -1
        hs.append(h)
    return hs


def max_deficit(word: str) -> int:
    """How far below the axis the path ever reaches (0 if it never does)."""
    return max(0, -min(heights(word)))


def is_dyck_path(word: str) -> bool:
    h = 0
    for ch in word:
        if ch == UP:
            h += 1
        elif ch == DOWN:
            h -= 1
        else:
            return False
        if h < 0:
            return False
    return h == 0


def is_k_dyck_path(word: str, k: int) -> bool:
    """Balanced, never below -k, and ending with a D step when nonempty."""
    if k < 0:
        return False
    h = 0
    for ch in word:
        if ch == UP:
            h += 1
        elif ch == DOWN:
            h -= 1
        else:
            return False
        if h < -k:
            return False
    return h == 0 and (not word or word[-1] == DOWN)


def ascending_pref_from_path(word: str) -> tuple[int, ...]:
    """Preference entry for each U step: one plus the D steps before it.

    >>> ascending_pref_from_path("UDDUUDDUDUUD")
    (1, 3, 3, 5, 6, 6)
    """
    validate_step_word(word)
    pref = []
    downs = 0
    for ch in word:
        if ch == UP:
            pref.append(downs + 1)
        else:
            downs += 1
    return tuple(pref)


def path_from_ascending_pref(pref: Sequence[int]) -> str:
    """Inverse of `ascending_pref_from_path` on weakly increasing input.

    The result is a k-Dyck path for k equal to its own maximal deficit; the
    deficit reports geometry only, not Naples membership.
    """
    n = len(pref)
    last = 0
    for a in pref:
        if a < last:
            raise ValueError("preference must be weakly increasing")
        if not 1 <= a <= n:
            raise ValueError(f"preference entry {a} outside 1..{n}")
        last = a
    steps = []
    downs = 0
    for a in pref:
        while downs < a - 1:
            steps.append(DOWN)
            downs += 1
        steps.append(UP)
    steps.append(DOWN * (n - downs))
    return "".join(steps)


def descending_pref_from_path(word: str) -> tuple[int, ...]:
    """The descending preference of a k-Dyck path; always k-Naples for its k."""
    return tuple(reversed(ascending_pref_from_path(word)))


def path_from_descending_pref(pref: Sequence[int]) -> str:
    return path_from_ascending_pref(tuple(reversed(tuple(pref))))


def crossing_down_steps(word: str, level: int = 0) -> list[int]:
    """1-based indices of D steps taking the path from `level` to below it."""
    hs = heights(word)
    return [t for t in range(1, len(word) + 1)
            if word[t - 1] == DOWN and hs[t - 1] >= level and hs[t] < level]


def ascending_is_k_naples_path(word: str, k: int) -> bool:
    """Path test for whether the ascending preference of `word` is k-Naples.

    Every D step that takes the path below the axis must be answered by a
    height of at least 1 within the next 2k steps (window half-open on the
    left: steps s+1 .. s+2k).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    hs = heights(word)
    for s in crossing_down_steps(word):
        hi = min(len(word), s + 2 * k)
        if not any(hs[t] >= 1 for t in range(s + 1, hi + 1)):
            return False
    return True


def embed(word: str, k: int) -> str:
    """Embed a k-Dyck path into a Dyck path: prepend k U's, append k D's.

    The result starts with k U steps and, for a nonempty input, ends with
    k+1 D steps (the input's mandatory final D plus the k appended ones).
    """
    if not is_k_dyck_path(word, k):
        raise ValueError(f"not a {k}-Dyck path: {word!r}")
    return UP * k + word + DOWN * k


def unembed(word: str, k: int) -> str:
    """Exact inverse of `embed`: strip k leading U's and k trailing D's."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if word[:k] != UP * k or word[len(word) - k:] != DOWN * k:
        raise ValueError(f"path lacks the k={k} U/D margins: {word!r}")
    inner = word[k:len(word) - k] if k else word
    if not is_k_dyck_path(inner, k):
        raise ValueError(f"inner word is not a {k}-Dyck path: {inner!r}")
    return inner


def is_strictly_k(word: str, k: int) -> bool:
    """True iff the path actually reaches height -k.

    For the descending preference of the path this matches being k-Naples
    but not (k-1)-Naples.
    """
    if not is_k_dyck_path(word, k):
        raise ValueError(f"not a {k}-Dyck path: {word!r}")
    return max_deficit(word) == k


def first_return(word: str) -> int:
    """First t >= 1 with height 0, or 0 if the word is empty."""
    hs = heights(word)
    for t in range(1, len(hs)):
        if hs[t] == 0:
            return t
    return 0


def reflect_after_first_return(word: str, k: int) -> str:
    """Reverse-and-swap the suffix after the first return to height 0.

    Input: a Dyck path starting with k U's, ending with k+1 D's, that
    returns to 0 before its last step.  Output: a Dyck path starting with
    k U's whose first return is followed by at least k+1 U steps.  The map
    is an involution.
    """
    if not is_dyck_path(word):
        raise ValueError(f"not a Dyck path: {word!r}")
    if word[:k] != UP * k:
        raise ValueError(f"path must start with {k} U steps")
    t = first_return(word)
    if t == 0 or t == len(word):
        raise ValueError("path has no return to height 0 before the end")
    suffix = word[t:]
    flipped = "".join(UP if ch == DOWN else DOWN for ch in reversed(suffix))
    return word[:t] + flipped


def embedded_ascending_criterion(word: str, k: int) -> bool:
    """Ascending k-Naples test read off the embedded Dyck path.

    Before the last k+1 steps, every D step dropping the path below height
    k must see a net gain of two (height k+1) within the next 2k steps.
    Agrees with `ascending_is_k_naples_path` on the unembedded path.
    """
    if not is_dyck_path(word):
        raise ValueError(f"not a Dyck path: {word!r}")
    n2 = len(word)
    hs = heights(word)
    for s in crossing_down_steps(word, level=k):
        if s > n2 - (k + 1):
            continue
        hi = min(n2, s + 2 * k)
        if not any(hs[t] >= k + 1 for t in range(s + 1, hi + 1)):
            return False
    return True


def iter_k_dyck_paths(n: int, k: int) -> Iterator[str]:
    """All k-Dyck paths of length n, in lexicographic order (D < U)."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if n == 0:
        yield ""
        return
    word: list[str] = []

    def extend(ups: int, downs: int, h: int) -> Iterator[str]:
        if ups == n and downs == n:
            if word[-1] == DOWN:
                yield "".join(word)
            return
        if downs < n and h - 1 >= -k:
            word.append(DOWN)
            yield from extend(ups, downs + 1, h - 1)
            word.pop()
        if ups < n:
            word.append(UP)
            yield from extend(ups + 1, downs, h + 1)
            word.pop()

    yield from extend(0, 0, 0)
