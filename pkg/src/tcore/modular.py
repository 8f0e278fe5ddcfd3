"""Kronecker symbol, eta-quotient checks, cusp orders and Hecke operators T_p."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from .series import EXACT, Ring, TruncatedSeries, euler_product, identity, mul, shift

# (2/n) for odd n, indexed by n mod 8
_TAB2 = (0, 1, 0, -1, 0, -1, 0, 1)


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) for arbitrary integers a, n."""
    a, n = int(a), int(n)
    if n == 0:
        return 1 if abs(a) == 1 else 0
    if a % 2 == 0 and n % 2 == 0:
        return 0
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    k = 1 if v % 2 == 0 else _TAB2[a & 7]
    if n < 0:
        n = -n
        if a < 0:
            k = -k
    while True:
        if a == 0:
            return k if n == 1 else 0
        v = 0
        while a % 2 == 0:
            a //= 2
            v += 1
        if v % 2:
            k *= _TAB2[n & 7]
        if a & n & 2:
            k = -k
        r = abs(a)
        a = n % r
        n = r


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def gamma0_index(N: int) -> int:
    """[SL2(Z) : Gamma0(N)] = N prod_{p | N} (1 + 1/p)."""
    if N < 1:
        raise ValueError(f"level must be >= 1, got {N}")
    index = N
    for p in prime_factors(N):
        index = index // p * (p + 1)
    return index


# -- eta quotients ------------------------------------------------------------


@dataclass(frozen=True)
class EtaQuotient:
    """prod_{delta | level} eta(delta z)^r_delta."""

    level: int
    exponents: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.level < 1:
            raise ValueError(f"level must be >= 1, got {self.level}")
        clean = {}
        for d, r in sorted(self.exponents.items()):
            d, r = int(d), int(r)
            if d < 1 or self.level % d:
                raise ValueError(f"{d} does not divide the level {self.level}")
            if r == 0:
                raise ValueError(f"exponent for delta={d} must be nonzero")
            clean[d] = r
        object.__setattr__(self, "exponents", clean)

    def __hash__(self):
        return hash((self.level, tuple(self.exponents.items())))

    @property
    def weight(self) -> Fraction:
        return Fraction(sum(self.exponents.values()), 2)

    @property
    def sum_at_infinity(self) -> int:
        return sum(d * r for d, r in self.exponents.items())

    @property
    def sum_at_zero(self) -> int:
        return sum(self.level // d * r for d, r in self.exponents.items())

    def __str__(self):
        parts = [
            f"eta({d}z)" + (f"^{r}" if r != 1 else "") for d, r in self.exponents.items()
        ]
        return "".join(parts) or "1"


@dataclass(frozen=True)
class CharacterSpec:
    """chi(d) = ((-1)^k s / d) with s = prod delta^r_delta."""

    weight: Fraction
    s: Fraction
    discriminant: int | None

    def __call__(self, d: int) -> int:
        if self.discriminant is None:
            raise ValueError(f"no character attached to half-integral weight {self.weight}")
        return kronecker(self.discriminant, d)

    @classmethod
    def from_discriminant(cls, D: int, weight: int = 1) -> CharacterSpec:
        return cls(Fraction(weight), Fraction(abs(D)), D)


def character_of(eq: EtaQuotient) -> CharacterSpec:
    s = Fraction(1)
    for d, r in eq.exponents.items():
        s *= Fraction(d) ** r
    k = eq.weight
    if k.denominator != 1:
        return CharacterSpec(k, s, None)
    # s^num * s^den has the same symbol as s itself: they differ by a square.
    D = (-1) ** int(k) * s.numerator * s.denominator
    return CharacterSpec(k, s, D)


def cusp_order(eq: EtaQuotient, d: int, c: int | None = None) -> Fraction:
    """Order of vanishing at the cusp c/d; c (coprime to d) does not matter."""
    N = eq.level
    if d < 1 or N % d:
        raise ValueError(f"{d} does not divide the level {N}")
    if c is not None and gcd(c, d) != 1:
        raise ValueError(f"cusp {c}/{d} is not in lowest terms")
    total = sum(
        Fraction(gcd(d, delta) ** 2 * r, gcd(d, N // d) * d * delta)
        for delta, r in eq.exponents.items()
    )
    return Fraction(N, 24) * total


@dataclass(frozen=True)
class AdmissibilityResult:
    weight: Fraction
    weight_integral: bool
    sum_at_infinity: int
    sum_at_zero: int
    cond_A: bool
    cond_B: bool
    character: CharacterSpec
    cusp_orders: dict[int, Fraction]
    min_cusp_order: Fraction
    holomorphic_at_cusps: bool

    @property
    def modular(self) -> bool:
        """All computable conditions for membership in M_k(Gamma0(N), chi) hold."""
        return (
            self.weight_integral
            and self.weight > 0
            and self.cond_A
            and self.cond_B
            and self.holomorphic_at_cusps
        )


def admissibility_check(eq: EtaQuotient) -> AdmissibilityResult:
    orders = {d: cusp_order(eq, d) for d in divisors(eq.level)}
    low = min(orders.values())
    return AdmissibilityResult(
        weight=eq.weight,
        weight_integral=eq.weight.denominator == 1,
        sum_at_infinity=eq.sum_at_infinity,
        sum_at_zero=eq.sum_at_zero,
        cond_A=eq.sum_at_infinity % 24 == 0,
        cond_B=eq.sum_at_zero % 24 == 0,
        character=character_of(eq),
        cusp_orders=orders,
        min_cusp_order=low,
        holomorphic_at_cusps=low >= 0,
    )


def eta_expansion(eq: EtaQuotient, length: int, ring: Ring = EXACT) -> TruncatedSeries:
    """q-expansion of an eta quotient whose order at infinity is a non-negative integer."""
    total = eq.sum_at_infinity
    if total % 24 or total < 0:
        raise ValueError(f"order at infinity {Fraction(total, 24)} is not a non-negative integer")
    f = identity(length, ring)
    for d, r in eq.exponents.items():
        f = mul(f, euler_product(d, r, length, ring))
    return shift(f, total // 24)


# -- Hecke operators ----------------------------------------------------------


def hecke_Tp(f: TruncatedSeries, p: int, k: int, chi) -> TruncatedSeries:
    """Coefficients a(pn) + chi(p) p^(k-1) a(n/p), with a(n/p) = 0 when p does not divide n."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    k = Fraction(k)
    if k.denominator != 1 or k < 1:
        raise ValueError(f"weight must be a positive integer, got {k}")
    out_len = (len(f) - 1) // p + 1
    a = f.coeffs
    factor = chi(p) * p ** (int(k) - 1)
    head = a[: p * (out_len - 1) + 1 : p][:out_len]
    tail = np.zeros(out_len, dtype=a.dtype)
    idx = np.arange(0, out_len, p)
    tail[idx] = a[idx // p]
    m = f.ring.modulus
    if m is not None:
        factor %= m
    return TruncatedSeries(head + factor * tail, f.ring)


@dataclass(frozen=True)
class EigenCheck:
    ok: bool
    eigenvalue: int
    verified_range: int
    first_failure: int | None = None


def eigen_check(f: TruncatedSeries, p: int, k: int, chi) -> EigenCheck:
    """Test T_p f = a(p) f on every coefficient both sides determine."""
    if len(f) < 2 or f[0] != 0 or f[1] != 1:
        raise ValueError("eigen_check expects a normalized form: a(0) = 0, a(1) = 1")
    if len(f) <= p:
        raise ValueError(f"series of length {len(f)} does not determine a({p})")
    lam = f[p]
    image = hecke_Tp(f, p, k, chi)
    expected = f.truncate(len(image)).scale(lam)
    diff = np.flatnonzero(image.coeffs != expected.coeffs)
    if len(diff):
        return EigenCheck(False, lam, int(diff[0]), int(diff[0]))
    return EigenCheck(True, lam, len(image))
