"""The k-Naples parking process.

A parking preference of length n is a sequence (a_1, ..., a_n) with each
a_i in {1, ..., n}.  Cars c_1, ..., c_n enter a one-way street with n spots
in order.  Car c_i drives to spot a_i; if it is taken, the car backs up
through spots a_i - 1, a_i - 2, ..., max(1, a_i - k) in that order and takes
the first free one; failing that it drives forward from a_i + 1 and takes the
first free spot.  If no spot remains the whole preference fails at car c_i.
A preference is a k-Naples parking function when every car parks.  k = 0 is
the classical parking rule (no backing up).

Spots and cars are 1-based throughout.  Preferences are plain tuples of ints,
outcomes are immutable `ParkingOutcome` values; every function here is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class ParkingOutcome:
    """Result of running the parking process.

    On success `assignment[i-1]` is the spot taken by car c_i and the
    assignment is a permutation of {1, ..., n}.  On failure `failed_car` is
    the 1-based index of the first car that could not park; the simulation
    stops there.
    """

    assignment: tuple[int, ...] | None
    failed_car: int | None = None

    @property
    def ok(self) -> bool:
        return self.assignment is not None

    def __str__(self) -> str:
        if self.assignment is not None:
            body = ",".join(str(d) for d in self.assignment)
            return f"ok: {body}" if body else "ok:"
        return f"fail@{self.failed_car}"


def validate_preference(entries: Iterable[int]) -> tuple[int, ...]:
    """Return `entries` as a tuple, checking every spot lies in {1..n}."""
    pref = tuple(entries)
    n = len(pref)
    for a in pref:
        if not isinstance(a, int) or not 1 <= a <= n:
            raise ValueError(f"preference entry {a!r} outside 1..{n}")
    return pref


def parse_preference(text: str) -> tuple[int, ...]:
    """Parse the comma-separated text form, e.g. "6,6,6,5,5,2,1"."""
    text = text.strip()
    if not text:
        return ()
    try:
        entries = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"malformed preference literal {text!r}") from None
    return validate_preference(entries)


def format_preference(pref: Sequence[int]) -> str:
    return ",".join(str(a) for a in pref)


def _simulate(occupied: list[bool], prefs: Sequence[int], first_car: int,
              k: int, n: int) -> tuple[list[int] | None, int]:
    """Run cars `first_car, first_car+1, ...` with lot state `occupied`.

    `occupied` has n+1 slots (index 0 unused) and is mutated.  Returns the
    list of newly taken spots, or (None, failed_car) at the first stuck car.
    """
    taken: list[int] = []
    car = first_car
    for a in prefs:
        spot = 0
        if not occupied[a]:
            spot = a
        else:
            # backward scan, nearest first
            for s in range(a - 1, max(1, a - k) - 1, -1):
                if not occupied[s]:
                    spot = s
                    break
            else:
                for s in range(a + 1, n + 1):
                    if not occupied[s]:
                        spot = s
                        break
        if spot == 0:
            return None, car
        occupied[spot] = True
        taken.append(spot)
        car += 1
    return taken, 0


def park(pref: Sequence[int], k: int) -> ParkingOutcome:
    """Park all cars of `pref` under the k-Naples rule.

    >>> str(park((2, 2, 1, 4), 0))
    'ok: 2,3,1,4'
    >>> str(park((6, 6, 6, 5, 5, 2, 1), 1))
    'fail@5'
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    pref = validate_preference(pref)
    n = len(pref)
    occupied = [False] * (n + 1)
    taken, failed = _simulate(occupied, pref, 1, k, n)
    if taken is None:
        return ParkingOutcome(None, failed)
    return ParkingOutcome(tuple(taken))


def park_filled(parked: Sequence[int], remaining: Sequence[int],
                k: int) -> ParkingOutcome:
    """Continue the process from a partially filled lot.

    `parked` lists the distinct spots already taken by cars 1..i, `remaining`
    the preferences of cars i+1..n (so n = len(parked) + len(remaining)).
    On success the outcome's assignment is `parked` followed by the spots the
    remaining cars take.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    parked = tuple(parked)
    remaining = tuple(remaining)
    n = len(parked) + len(remaining)
    if len(set(parked)) != len(parked):
        raise ValueError("parked spots must be pairwise distinct")
    for d in parked:
        if not 1 <= d <= n:
            raise ValueError(f"parked spot {d} outside 1..{n}")
    for a in remaining:
        if not 1 <= a <= n:
            raise ValueError(f"preference entry {a} outside 1..{n}")
    occupied = [False] * (n + 1)
    for d in parked:
        occupied[d] = True
    taken, failed = _simulate(occupied, remaining, len(parked) + 1, k, n)
    if taken is None:
        return ParkingOutcome(None, failed)
    return ParkingOutcome(parked + tuple(taken))


def is_k_naples(pref: Sequence[int], k: int) -> bool:
    """True iff every car of `pref` parks under the k-Naples rule."""
    return park(pref, k).ok


def minimal_k(pref: Sequence[int]) -> int:
    """Smallest k for which `pref` is a k-Naples parking function.

    Always at most n - 1: with full backward reach a car scans every spot.
    Requires n >= 1 (the bound is ill-posed for an empty preference).
    """
    pref = validate_preference(pref)
    if not pref:
        raise ValueError("minimal_k requires a nonempty preference")
    for k in range(len(pref)):
        if is_k_naples(pref, k):
            return k
    raise AssertionError("unreachable: every preference is (n-1)-Naples")


def rearrangements_all_k_naples(pref: Sequence[int], k: int) -> bool:
    """True iff every rearrangement of `pref` is a k-Naples parking function.

    Only the ascending rearrangement is simulated: all rearrangements park
    exactly when the ascending one does, so this is a single park() call.
    """
    return is_k_naples(sorted(pref), k)
