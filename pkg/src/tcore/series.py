"""Truncated power series in q over Z or Z/mZ.

A :class:`TruncatedSeries` of length N stores c(0), ..., c(N-1). Binary
operations truncate to the shorter operand; nothing is ever zero-extended.
Exact coefficients are Python integers held in object arrays, residues mod m
are int64 arrays (object arrays once m exceeds 2**31), and mod 2 products go
through the bit-packed routines in :mod:`tcore._gf2`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _gf2

_INT64_MODULUS_LIMIT = 1 << 31
_INT64_MAX = (1 << 63) - 1


class RingMismatchError(ValueError):
    pass


class NotAUnitError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Ring:
    """Coefficient ring: exact integers when ``modulus`` is None, else Z/mZ."""

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None and self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")

    @property
    def is_exact(self) -> bool:
        return self.modulus is None

    @property
    def dtype(self):
        if self.modulus is None or self.modulus > _INT64_MODULUS_LIMIT:
            return object
        return np.int64

    def unit_inverse(self, c: int) -> int:
        c = int(c)
        if self.modulus is None:
            if c not in (1, -1):
                raise NotAUnitError(f"{c} is not a unit in Z")
            return c
        if math.gcd(c, self.modulus) != 1:
            raise NotAUnitError(f"{c} is not a unit mod {self.modulus}")
        return pow(c, -1, self.modulus)

    def __str__(self):
        return "Z" if self.modulus is None else f"Z/{self.modulus}Z"


EXACT = Ring()


def Mod(m: int) -> Ring:
    return Ring(m)


class TruncatedSeries:
    """Immutable q-expansion c(0) + c(1) q + ... + c(N-1) q^(N-1)."""

    __slots__ = ("ring", "_c")

    def __init__(self, coeffs, ring: Ring = EXACT):
        arr = _coerce(coeffs, ring)
        if len(arr) == 0:
            raise ValueError("a truncated series needs at least one coefficient")
        arr.setflags(write=False)
        self.ring = ring
        self._c = arr

    @classmethod
    def _wrap(cls, arr, ring):
        obj = cls.__new__(cls)
        arr = np.ascontiguousarray(arr, dtype=ring.dtype)
        arr.setflags(write=False)
        obj.ring = ring
        obj._c = arr
        return obj

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    def __len__(self):
        return len(self._c)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return [int(x) for x in self._c[i]]
        return int(self._c[i])

    def tolist(self) -> list[int]:
        return [int(x) for x in self._c]

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.ring == other.ring
            and len(self) == len(other)
            and bool(np.all(self._c == other._c))
        )

    __hash__ = None

    def __repr__(self):
        head = ", ".join(str(x) for x in self.tolist()[:8])
        more = ", ..." if len(self) > 8 else ""
        return f"TruncatedSeries([{head}{more}], length={len(self)}, ring={self.ring})"

    def truncate(self, n: int) -> TruncatedSeries:
        if not 1 <= n <= len(self):
            raise ValueError(f"cannot truncate length {len(self)} to {n}")
        return TruncatedSeries._wrap(self._c[:n], self.ring)

    def __add__(self, other):
        _check_rings(self, other)
        n = min(len(self), len(other))
        return _reduced(self._c[:n] + other._c[:n], self.ring)

    def __sub__(self, other):
        _check_rings(self, other)
        n = min(len(self), len(other))
        return _reduced(self._c[:n] - other._c[:n], self.ring)

    def __neg__(self):
        return _reduced(-self._c, self.ring)

    def scale(self, c: int) -> TruncatedSeries:
        c = int(c)
        if self.ring.modulus is not None:
            c %= self.ring.modulus
        return _reduced(self._c * c, self.ring)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return NotImplemented


def _coerce(values, ring):
    m = ring.modulus
    if isinstance(values, np.ndarray) and values.dtype != object:
        arr = values.astype(np.int64)
        if m is not None:
            arr = arr % m
        return np.array(arr, dtype=ring.dtype)
    ints = [int(v) for v in values]
    if m is not None:
        ints = [v % m for v in ints]
    if ring.dtype is object:
        arr = np.empty(len(ints), dtype=object)
        arr[:] = ints
        return arr
    return np.array(ints, dtype=np.int64)


def _reduced(arr, ring):
    if ring.modulus is not None:
        arr = arr % ring.modulus
    return TruncatedSeries._wrap(arr, ring)


def _check_rings(f, g):
    if f.ring != g.ring:
        raise RingMismatchError(f"ring mismatch: {f.ring} vs {g.ring}")


def identity(length: int, ring: Ring = EXACT) -> TruncatedSeries:
    arr = np.zeros(length, dtype=ring.dtype)
    arr[0] = 1
    return TruncatedSeries._wrap(arr, ring)


def zeros(length: int, ring: Ring = EXACT) -> TruncatedSeries:
    return TruncatedSeries._wrap(np.zeros(length, dtype=ring.dtype), ring)


def shift(f: TruncatedSeries, k: int) -> TruncatedSeries:
    """Multiply by q^k keeping the length (an index remap, not a product)."""
    if k < 0:
        raise ValueError("shift must be non-negative")
    out = np.zeros(len(f), dtype=f.ring.dtype)
    if k < len(f):
        out[k:] = f.coeffs[: len(f) - k]
    return TruncatedSeries._wrap(out, f.ring)


# -- multiplication -----------------------------------------------------------


def mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    _check_rings(f, g)
    n = min(len(f), len(g))
    a, b = f.coeffs[:n], g.coeffs[:n]
    if f.ring.modulus == 2:
        return TruncatedSeries._wrap(_gf2.mul(a, b, n), f.ring)
    return TruncatedSeries._wrap(_convolve(a, b, n, f.ring.modulus), f.ring)


def _mul_generic(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Ring-agnostic product; the mod 2 fast path must agree with this."""
    _check_rings(f, g)
    n = min(len(f), len(g))
    out = _shift_add(f.coeffs[:n], g.coeffs[:n], n, f.ring.modulus)
    return TruncatedSeries._wrap(out, f.ring)


def _convolve(a, b, n, m):
    sparse = min(np.count_nonzero(a), np.count_nonzero(b))
    if (
        m is not None
        and a.dtype != object
        and sparse > 64
        and n * (m - 1) ** 2 < _INT64_MAX
    ):
        return np.convolve(a, b)[:n] % m
    return _shift_add(a, b, n, m)


def _shift_add(a, b, n, m):
    # One vectorized pass per nonzero coefficient of the sparser operand.
    if np.count_nonzero(a) > np.count_nonzero(b):
        a, b = b, a
    out = np.zeros(n, dtype=b.dtype)
    if m is None or out.dtype == object:
        for i in np.flatnonzero(a).tolist():
            out[i:] += a[i] * b[: n - i]
        return out % m if m is not None else out
    step = (m - 1) ** 2
    bound = 0
    for i in np.flatnonzero(a).tolist():
        if bound + step > _INT64_MAX:
            out %= m
            bound = m - 1
        out[i:] += int(a[i]) * b[: n - i]
        bound += step
    return out % m


# -- inversion ----------------------------------------------------------------


def reciprocal(f: TruncatedSeries) -> TruncatedSeries:
    """1/f to the length of f; the constant term must be a unit."""
    inv = f.ring.unit_inverse(f[0])
    if f.ring.modulus == 2:
        return TruncatedSeries._wrap(_gf2.reciprocal(f.coeffs), f.ring)
    return _reciprocal_recurrence(f, inv)


def _reciprocal_recurrence(f, inv=None):
    # r(n) = -c(0)^-1 * sum_{i=1..n} c(i) r(n-i), summing only over nonzero c(i);
    # for f = (q;q) this is the pentagonal-number recurrence.
    ring = f.ring
    if inv is None:
        inv = ring.unit_inverse(f[0])
    m = ring.modulus
    n = len(f)
    c = f.tolist()
    terms = [(i, c[i]) for i in range(1, n) if c[i]]
    r = [0] * n
    r[0] = inv
    for k in range(1, n):
        s = 0
        for i, ci in terms:
            if i > k:
                break
            s += ci * r[k - i]
        s = -inv * s
        r[k] = s % m if m is not None else s
    return TruncatedSeries(r, ring)


def div(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    _check_rings(f, g)
    return mul(f, reciprocal(g))


def power(f: TruncatedSeries, e: int) -> TruncatedSeries:
    if e < 0:
        return reciprocal(power(f, -e))
    result = identity(len(f), f.ring)
    base = f
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


# -- Euler products -----------------------------------------------------------


def pentagonal(step: int, length: int, ring: Ring = EXACT) -> TruncatedSeries:
    """(q^step; q^step)_inf from sum_k (-1)^k q^(step * k(3k-1)/2), k in Z."""
    if step < 1 or length < 1:
        raise ValueError("step and length must be positive")
    arr = np.zeros(length, dtype=object)
    arr[:] = 0
    k = 0
    while step * k * (3 * k - 1) // 2 < length:
        sign = -1 if k % 2 else 1
        arr[step * k * (3 * k - 1) // 2] += sign
        g = step * k * (3 * k + 1) // 2
        if k and g < length:
            arr[g] += sign
        k += 1
    return TruncatedSeries(arr, ring)


def euler_product(step: int, exponent: int, length: int, ring: Ring = EXACT) -> TruncatedSeries:
    """Truncation of prod_{n>=1} (1 - q^(step*n))^exponent."""
    if step < 1:
        raise ValueError(f"step must be >= 1, got {step}")
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    if exponent == 0:
        return identity(length, ring)
    return power(pentagonal(step, length, ring), exponent)


def reduce_mod(f: TruncatedSeries, m: int) -> TruncatedSeries:
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    src = f.ring.modulus
    if src is not None and src % m:
        raise ValueError(f"cannot reduce a mod-{src} series mod {m}")
    target = Mod(m)
    arr = f.coeffs % m
    return TruncatedSeries._wrap(np.array(arr, dtype=target.dtype), target)
