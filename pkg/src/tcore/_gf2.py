"""Bit-packed arithmetic for series over Z/2Z.

Coefficient arrays are converted to Python integers (bit i is the coefficient
of q^i), so a product becomes an XOR of shifted copies of the denser operand,
one per set bit of the sparser one.
"""

import numpy as np


def to_int(bits):
    packed = np.packbits(np.asarray(bits, dtype=np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def from_int(x, n):
    nbytes = (n + 7) // 8
    raw = np.frombuffer((x & ((1 << n) - 1)).to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].astype(np.int64)


def mul(a, b, n):
    a = a[:n]
    b = b[:n]
    if np.count_nonzero(a) > np.count_nonzero(b):
        a, b = b, a
    dense = to_int(b)
    acc = 0
    for i in np.flatnonzero(a).tolist():
        acc ^= dense << i
    return from_int(acc, n)


def square(a, n):
    # Frobenius: f(q)^2 = f(q^2) in characteristic 2.
    out = np.zeros(n, dtype=np.int64)
    half = a[: (n + 1) // 2]
    out[: 2 * len(half) : 2] = half
    return out


def reciprocal(a):
    """Newton iteration r <- f * r^2, doubling the precision each step."""
    n = len(a)
    r = np.ones(1, dtype=np.int64)
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        r = mul(a[:prec], square(r, prec), prec)
    return r
