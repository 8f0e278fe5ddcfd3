#!/usr/bin/env python3
"""Compare the a_13 vanishing progressions for eps = 1 against eps = 8.

For a prime p and j not divisible by p, the catalog checks

    a_13(104 p^2 n + 13 p (eps_p j + p) - 7) = 0  (mod 2)

with eps_p = 1 when p != 1 (mod 8). The argument is of the form 104m + 6
only when p (eps j + p) = 1 (mod 8). For eps = 1 that requires 8 | j, so
the a_13 -> a_2 reduction does not apply to the other j. With eps = 8 the
progression is 104 (p^2 n + p j + (p^2 - 1)/8) + 6, which lands on the
a_2 progression that is known to vanish.

This script sweeps both variants and prints the failure counts.
"""

import argparse

import numpy as np

from tcore.generators import tcore_series
from tcore.modular import is_prime
from tcore.series import Mod


def parse_args():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=[3, 5, 7, 11, 13])
    ap.add_argument("--limit", type=int, default=200_000, help="largest a_13 index")
    return ap.parse_args()


def sweep(a13, p, j, eps, limit):
    A = 104 * p * p
    B = 13 * p * (eps * j + p) - 7
    ns = np.arange(0, (limit - B) // A + 1)
    if len(ns) == 0:
        return 0, 0, None
    vals = a13[A * ns + B]
    bad = np.flatnonzero(vals)
    return len(ns), len(bad), int(ns[bad[0]]) if len(bad) else None


def main():
    args = parse_args()
    a13 = tcore_series(13, args.limit + 1, Mod(2)).data.coeffs
    print(f"{'p':>3} {'j':>3} {'eps':>3} {'args=6 mod 104':>15} {'checked':>8} {'odd':>5} {'first n':>8}")
    for p in args.primes:
        if not is_prime(p) or p < 3:
            continue
        for j in range(1, min(p, 9)):
            for eps in (1, 8):
                on_chain = (13 * p * (eps * j + p) - 7 - 6) % 104 == 0
                checked, odd, first = sweep(a13, p, j, eps, args.limit)
                print(f"{p:>3} {j:>3} {eps:>3} {str(on_chain):>15} {checked:>8} {odd:>5} {str(first):>8}")


if __name__ == "__main__":
    main()
