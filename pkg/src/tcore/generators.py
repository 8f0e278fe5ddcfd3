"""Named q-series: t-core counts, b(n), c(n) and the Das right-hand side.

    sum a_t(n) q^n = (q^t;q^t)^t / (q;q)
    sum b(n) q^n   = q (q^8;q^8)(q^16;q^16)
    sum c(n) q^n   = (q;q)^3
    das            = (q;q)(q^2;q^2)
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .series import EXACT, Ring, TruncatedSeries, div, euler_product, mul, shift


@dataclass(frozen=True)
class NamedSeries:
    tag: str
    data: TruncatedSeries
    t: int | None = None

    def __len__(self):
        return len(self.data)

    def __getitem__(self, i):
        return self.data[i]

    @property
    def coeffs(self) -> np.ndarray:
        return self.data.coeffs


def tcore_series(t: int, length: int, ring: Ring = EXACT) -> NamedSeries:
    if t < 2:
        raise ValueError(f"t must be >= 2, got {t}")
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    data = div(euler_product(t, t, length, ring), euler_product(1, 1, length, ring))
    return NamedSeries("a_t", data, t)


def b_series(length: int, ring: Ring = EXACT) -> NamedSeries:
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    if length == 1:
        return NamedSeries("b", TruncatedSeries([0], ring))
    core = mul(euler_product(8, 1, length, ring), euler_product(16, 1, length, ring))
    return NamedSeries("b", shift(core, 1))


def c_series(length: int, ring: Ring = EXACT) -> NamedSeries:
    return NamedSeries("c", euler_product(1, 3, length, ring))


def das_series(length: int, ring: Ring = EXACT) -> NamedSeries:
    return NamedSeries(
        "das", mul(euler_product(1, 1, length, ring), euler_product(2, 1, length, ring))
    )


def c_closed(n: int) -> int:
    """(-1)^k (2k+1) if n = k(k+1)/2, else 0 (Jacobi's cube identity)."""
    if n < 0:
        return 0
    s = isqrt(8 * n + 1)
    if s * s != 8 * n + 1:
        return 0
    k = (s - 1) // 2
    return -s if k % 2 else s


def a2_closed(n: int) -> int:
    """1 when n is triangular (the staircase is the only 2-core of n), else 0."""
    if n < 0:
        return 0
    s = isqrt(8 * n + 1)
    return int(s * s == 8 * n + 1)


def is_square_array(x: np.ndarray) -> np.ndarray:
    """Vectorized perfect-square test for non-negative int64 arrays."""
    x = np.asarray(x, dtype=np.int64)
    s = np.floor(np.sqrt(x.astype(np.float64))).astype(np.int64)
    # float sqrt can be off by one near 2**52; nudge both ways.
    s = np.where(s * s > x, s - 1, s)
    s = np.where((s + 1) * (s + 1) <= x, s + 1, s)
    return s * s == x


def a2_closed_array(ns: np.ndarray) -> np.ndarray:
    ns = np.asarray(ns, dtype=np.int64)
    return is_square_array(8 * ns + 1).astype(np.int64)


def hs3_indicator(n: int) -> int:
    """1 if n = 3r^2 + 2r for some integer r (either sign), else 0."""
    if n < 0:
        return 0
    r = 0
    while 3 * r * r - 2 * r <= n:
        if n in (3 * r * r + 2 * r, 3 * r * r - 2 * r):
            return 1
        r += 1
    return 0


def hs3_indicator_array(ns: np.ndarray) -> np.ndarray:
    ns = np.asarray(ns, dtype=np.int64)
    if len(ns) == 0:
        return np.zeros(0, dtype=np.int64)
    top = int(ns.max())
    hits = set()
    r = 0
    while 3 * r * r - 2 * r <= top:
        hits.add(3 * r * r + 2 * r)
        hits.add(3 * r * r - 2 * r)
        r += 1
    return np.fromiter((n in hits for n in ns.tolist()), dtype=np.int64, count=len(ns))
