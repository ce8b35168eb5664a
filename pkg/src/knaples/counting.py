"""Exact counts of monotone k-Naples parking functions.

I(n, k) is the number of ascending k-Naples parking functions of length n
and U(n, k) the number of those starting with 1.  Both satisfy, for k >= 1,

    I(n, k) = I(n, k-1) + C_k * sum_{i=0}^{n-k} I(i, k-1) U(n-k-i, k)
    U(n, k) = U(n, k-1) + C_k * sum_{i=0}^{n-k} U(i, k-1) U(n-k-i, k)

with I(n, 0) = C_n, U(0, k) = 0 and U(n, 0) = C_n for n > 0; the sums are
empty (zero) once n <= k, so nothing new appears at large k.  The U table
never consults I, so each fills independently.

Descending counts have closed forms: strictly k-Naples functions of length
n number (k+1)/n * binom(2n, n+k+1) (exact division), and all descending
k-Naples together number binom(2n-1, n) - binom(2n-1, n+k+1).

`verify_identities` replays the generating-function identities behind those
formulas coefficient by coefficient, in exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .series import (PowerSeries, binom, catalan, catalan_convolution_term,
                     catalan_series, fine_series)


@lru_cache(maxsize=None)
def count_ascending_starts_one(n: int, k: int) -> int:
    """U(n, k): ascending k-Naples parking functions of length n starting 1."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if n == 0:
        return 0
    if k == 0:
        return catalan(n)
    total = count_ascending_starts_one(n, k - 1)
    conv = sum(count_ascending_starts_one(i, k - 1)
               * count_ascending_starts_one(n - k - i, k)
               for i in range(0, n - k + 1))
    return total + catalan(k) * conv


@lru_cache(maxsize=None)
def count_ascending(n: int, k: int) -> int:
    """I(n, k): ascending k-Naples parking functions of length n."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if k == 0:
        return catalan(n)
    total = count_ascending(n, k - 1)
    conv = sum(count_ascending(i, k - 1)
               * count_ascending_starts_one(n - k - i, k)
               for i in range(0, n - k + 1))
    return total + catalan(k) * conv


def count_descending_strict(n: int, k: int) -> int:
    """Descending strictly k-Naples parking functions of length n.

    (k+1)/n * binom(2n, n+k+1); zero once n <= k, and the division is
    always exact (the value is a Catalan convolution term).
    """
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    num = (k + 1) * binom(2 * n, n + k + 1)
    if num % n:
        raise AssertionError(f"inexact division for n={n}, k={k}")
    return num // n


def count_descending_total(n: int, k: int) -> int:
    """All descending k-Naples parking functions of length n."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    return binom(2 * n - 1, n) - binom(2 * n - 1, n + k + 1)


def ascending_series(k: int, order: int) -> PowerSeries:
    return PowerSeries([count_ascending(n, k) for n in range(order + 1)])


def ascending_starts_one_series(k: int, order: int) -> PowerSeries:
    return PowerSeries([count_ascending_starts_one(n, k)
                        for n in range(order + 1)])


@dataclass
class IdentityReport:
    """Outcome of one coefficientwise identity check."""

    name: str
    order: int
    ok: bool
    failures: list[str] = field(default_factory=list)


def verify_identities(order: int, k_max: int = 4) -> list[IdentityReport]:
    """Replay the generating-function identities through x^order.

    Checked families:
      * the functional equations A_k = A_{k-1} + C_k x^k A_{k-1} U_k for
        A in {I, U} and 1 <= k <= k_max, with table-built series;
      * the closed Catalan convolution term against C(x)^r by raw series
        power, 1 <= r <= 2*k_max + 2;
      * the binomial sum  sum_i C_i binom(p-1-2i, q-1-i) = binom(p, q)
        over 1 <= q <= p <= 2q-1, p <= 2*order;
      * G(x) (C(x)-1)^k as the generating function of binom(2n+1, n+k+1),
        where G = C^2 / (1 - x C^2);
      * the strict/total decomposition D(x) = x G - x^{k+2} G C^{2k+2}
        against both closed binomial forms.

    Failures are reported, never raised.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    reports: list[IdentityReport] = []
    one = PowerSeries.one(order)
    c = catalan_series(order)
    u_series = {k: ascending_starts_one_series(k, order)
                for k in range(0, k_max + 1)}
    i_series = {k: ascending_series(k, order) for k in range(0, k_max + 1)}

    rep = IdentityReport("functional-equations", order, True)
    for k in range(1, k_max + 1):
        ck = catalan(k)
        for label, table in (("I", i_series), ("U", u_series)):
            lhs = table[k]
            rhs = table[k - 1] + ck * (table[k - 1] * u_series[k]).shift(k)
            for n in range(order + 1):
                if lhs.coeff(n) != rhs.coeff(n):
                    rep.ok = False
                    rep.failures.append(f"{label}_{k} coeff {n}: "
                                        f"{lhs.coeff(n)} != {rhs.coeff(n)}")
    reports.append(rep)

    rep = IdentityReport("catalan-convolution-term", order, True)
    for r in range(1, 2 * k_max + 3):
        power = c ** r
        for m in range(r, order + r + 1):
            if m - r > order:
                break
            closed = catalan_convolution_term(m, r)
            if closed != power.coeff(m - r):
                rep.ok = False
                rep.failures.append(f"m={m}, r={r}: {closed} != "
                                    f"{power.coeff(m - r)}")
    reports.append(rep)

    rep = IdentityReport("binomial-sum", order, True)
    for p in range(1, 2 * order + 1):
        for q in range(1, p + 1):
            if not q <= p <= 2 * q - 1:
                continue
            total = sum(catalan(i) * binom(p - 1 - 2 * i, q - 1 - i)
                        for i in range(q))
            if total != binom(p, q):
                rep.ok = False
                rep.failures.append(f"p={p}, q={q}: {total} != {binom(p, q)}")
    reports.append(rep)

    c2 = c * c
    g = c2 * (one - c2.shift(1)).inverse()
    rep = IdentityReport("central-binomial-family", order, True)
    shifted = g
    for k in range(0, k_max + 1):
        if k:
            shifted = shifted * (c - one)
        for n in range(order + 1 - k):
            if shifted.coeff(n) != binom(2 * n + 1, n + k + 1):
                rep.ok = False
                rep.failures.append(f"k={k}, n={n}: {shifted.coeff(n)} != "
                                    f"{binom(2 * n + 1, n + k + 1)}")
    reports.append(rep)

    rep = IdentityReport("descending-decomposition", order, True)
    fine_check = fine_series(order)
    xc2 = c2.shift(1)
    for k in range(0, k_max + 1):
        d = g.shift(1) - (g * c ** (2 * k + 2)).shift(k + 2)
        total_from_strict = PowerSeries(
            [0] + [sum(count_descending_strict(n, j) for j in range(k + 1))
                   for n in range(1, order + 1)])
        geometric = PowerSeries([0], order)
        term = xc2
        for _ in range(k + 1):
            geometric = geometric + term
            term = term * xc2
        for n in range(1, order + 1):
            closed = count_descending_total(n, k)
            values = {d.coeff(n), total_from_strict.coeff(n),
                      geometric.coeff(n), closed}
            if len(values) != 1:
                rep.ok = False
                rep.failures.append(f"k={k}, n={n}: {sorted(values)}")
    reports.append(rep)

    rep = IdentityReport("fine-connection", order, True)
    for n in range(order):
        if count_ascending_starts_one(n, 1) != fine_check.coeff(n + 1):
            rep.ok = False
            rep.failures.append(f"U({n},1) != Fine coeff {n + 1}")
    cf = c * fine_check
    for n in range(order + 1):
        if count_ascending(n, 1) != cf.coeff(n):
            rep.ok = False
            rep.failures.append(f"I({n},1) != [x^{n}] C*F")
    reports.append(rep)

    return reports
