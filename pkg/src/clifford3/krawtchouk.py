"""Exact evaluation of Krawtchouk coefficients and the zero test they drive.

K_r(n, N) is the coefficient of z^r in (1-z)^n (1+z)^(N-n).  Everything is
big-integer arithmetic; the zero test must be exact, so no floating point
appears anywhere in this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import CongruenceViolation, IndexNegative, OracleRangeExceeded

ORACLE_MAX_N = 64


@dataclass(frozen=True)
class KrawtchoukQuery:
    """Coefficient index r and generating-function exponents n <= N."""

    r: int
    n: int
    N: int

    def __post_init__(self):
        if self.r < 0 or self.n < 0 or self.N < 0:
            raise ValueError("r, n, N must be nonnegative")
        if self.n > self.N:
            raise ValueError(f"need n <= N, got n={self.n}, N={self.N}")


def _binom(a: int, b: int) -> int:
    # total version: 0 outside 0 <= b <= a
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def krawtchouk(q: KrawtchoukQuery) -> int:
    """Closed-form evaluation: sum_j (-1)^j C(n,j) C(N-n, r-j)."""
    return sum(
        (-1) ** j * _binom(q.n, j) * _binom(q.N - q.n, q.r - j)
        for j in range(min(q.n, q.r) + 1)
    )


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


@lru_cache(maxsize=None)
def _expand(n: int, N: int) -> tuple[int, ...]:
    poly = [1]
    for _ in range(n):
        poly = _poly_mul(poly, [1, -1])
    for _ in range(N - n):
        poly = _poly_mul(poly, [1, 1])
    return tuple(poly)


def krawtchouk_oracle(q: KrawtchoukQuery) -> int:
    """Same coefficient by literal expansion of the two factors.

    Uses no binomial identities, so it serves as an independent check on
    :func:`krawtchouk`.  Capped at N <= 64 (the expansions are cached).
    """
    if q.N > ORACLE_MAX_N:
        raise OracleRangeExceeded(f"oracle capped at N <= {ORACLE_MAX_N}")
    poly = _expand(q.n, q.N)
    return poly[q.r] if q.r < len(poly) else 0


def delta_vanishes(g: int, d: int, s1: int, s1f: int) -> bool:
    """Whether the refinement coefficient K_{(2d+s1-3*s1f)/6 + 1}(g, 2g-s1f)
    is exactly zero.

    The index is an integer whenever the rank-3 congruences and the parity
    of s1f hold; a non-integer index is rejected.
    """
    num = 2 * d + s1 - 3 * s1f
    if num % 6 != 0:
        raise CongruenceViolation(
            1, f"2d+s1-3*s1f = {num} is not divisible by 6"
        )
    idx = num // 6 + 1
    if idx < 0:
        raise IndexNegative(f"coefficient index {idx} is negative")
    return krawtchouk(KrawtchoukQuery(idx, g, 2 * g - s1f)) == 0
