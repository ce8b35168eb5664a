"""Truncated formal power series with exact integer coefficients.

Everything here is big-integer arithmetic; no floating point is used
anywhere in the enumeration layer.  A `PowerSeries` holds coefficients
through a fixed truncation order N and supports ring operations plus the
reciprocal of a series with unit constant term (the only case in which the
reciprocal has integer coefficients, asserted per coefficient).

The Catalan series is produced division-free from c_{m+1} = sum c_i c_{m-i};
the Fine series is pinned to the generating function 1 / (1 - x^2 C(x)^2),
whose coefficients run 1, 0, 1, 2, 6, 18, 57, ...  (b-file style indexing
of the classical sequence shifts by one; see the README).
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence


class PowerSeries:
    """Integer power series truncated after x^order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int], order: int | None = None):
        cs = list(coeffs)
        if order is not None:
            cs = cs[:order + 1] + [0] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("series needs at least the constant coefficient")
        self.coeffs = cs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls([1], order)

    @classmethod
    def x(cls, order: int) -> "PowerSeries":
        return cls([0, 1], order)

    def coeff(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation {self.order}")
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        return isinstance(other, PowerSeries) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        return f"PowerSeries([{head}{', ...' if self.order > 7 else ''}])"

    def _match(self, other: "PowerSeries") -> int:
        if self.order != other.order:
            raise ValueError("truncation orders differ")
        return self.order

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        self._match(other)
        return PowerSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        self._match(other)
        return PowerSeries([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other) -> "PowerSeries":
        if isinstance(other, int):
            return PowerSeries([other * c for c in self.coeffs])
        order = self._match(other)
        out = [0] * (order + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(order + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return PowerSeries(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "PowerSeries":
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        result = PowerSeries.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, j: int) -> "PowerSeries":
        """Multiply by x^j."""
        if j < 0:
            raise ValueError("shift must be nonnegative")
        return PowerSeries([0] * j + self.coeffs, self.order)

    def inverse(self) -> "PowerSeries":
        """Reciprocal; requires constant term 1 or -1 so it stays integral."""
        a0 = self.coeffs[0]
        if a0 not in (1, -1):
            raise ValueError("reciprocal needs a unit constant term")
        out = [a0]
        for m in range(1, self.order + 1):
            acc = sum(self.coeffs[i] * out[m - i] for i in range(1, m + 1))
            out.append(-a0 * acc)
        return PowerSeries(out)


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    """n-th Catalan number by the division-free convolution recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    return sum(catalan(i) * catalan(n - 1 - i) for i in range(n))


def catalan_series(order: int) -> PowerSeries:
    return PowerSeries([catalan(n) for n in range(order + 1)])


def fine_series(order: int) -> PowerSeries:
    """F(x) = 1 / (1 - x^2 C(x)^2)."""
    c = catalan_series(order)
    return (PowerSeries.one(order) - (c * c).shift(2)).inverse()


def fine(n: int) -> int:
    """Coefficient of x^n in 1 / (1 - x^2 C(x)^2): 1, 0, 1, 2, 6, 18, ..."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return fine_series(n).coeff(n)


def catalan_fine_convolution(n: int) -> int:
    """Coefficient of x^n in C(x) F(x); equals the ascending 1-Naples count."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(catalan(i) * fine(n - i) for i in range(n + 1))


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside 0 <= b <= a."""
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def catalan_convolution_term(m: int, r: int) -> int:
    """m-th term of the r-th Catalan convolution: r/(2m-r) * C(2m-r, m).

    Equals the coefficient of x^(m-r) in C(x)^r; the division is exact on
    the whole range 1 <= r <= m (and the term is 1 at m = r).
    """
    if not 0 <= r <= m:
        raise ValueError(f"need 0 <= r <= m, got m={m}, r={r}")
    if r == 0:
        return 1 if m == 0 else 0
    num = r * binom(2 * m - r, m)
    den = 2 * m - r
    if num % den:
        raise AssertionError(f"inexact division for m={m}, r={r}")
    return num // den
