"""Catalog of t-core congruence families, compiled to explicit claims and swept.

A :class:`FamilyInstance` names a family and its parameters. :func:`compile`
turns it into concrete claims (arithmetic progressions with every division
already carried out), and :func:`verify` evaluates those claims for
n = n_start..n_max against series coefficients, without re-deriving anything.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from math import prod

import numpy as np

from .generators import (
    a2_closed_array,
    b_series,
    c_series,
    das_series,
    hs3_indicator_array,
    tcore_series,
)
from .modular import is_prime, kronecker
from .series import EXACT, Mod, Ring

FAMILY_IDS = (
    "HS3",
    "Eq5711",
    "GranvilleOno",
    "Lem4e2",
    "Lem4e3",
    "Lem4e6",
    "Lem4e7",
    "Lem4e8",
    "Lem4e9",
    "Lem4e10",
    "Lem4e11",
    "Das",
    "Chain4e13",
    "Chain4e18",
    "Thm1i",
    "Thm1ii",
    "Coro2i",
    "Coro2ii",
    "Thm3i",
    "Thm3ii",
    "Coro4i",
    "Coro4ii",
)
_BY_LOWER = {f.lower(): f for f in FAMILY_IDS}

COUNTEREXAMPLE_CAP = 10
DELTA_RULES = ("neg-inverse", "inverse")


class HypothesisError(ValueError):
    """A family's parameters violate one of its stated hypotheses."""


class BudgetExceeded(RuntimeError):
    def __init__(self, source, required, limit):
        super().__init__(
            f"{source} needs coefficients up to q^{required - 1} "
            f"(length {required}); budget allows index {limit}"
        )
        self.source = source
        self.required = required
        self.limit = limit


def family_id(name: str) -> str:
    try:
        return _BY_LOWER[name.lower()]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; known: {', '.join(FAMILY_IDS)}") from None


# -- data model ---------------------------------------------------------------


@dataclass(frozen=True)
class FamilyInstance:
    """One parameterized claim from the catalog.

    ``j`` is the residue parameter for the mod-2 families and the exponent for
    Eq5711/GranvilleOno. ``j=None`` on Lem4e3/Lem4e8/Lem4e10 means every
    j in 1..p-1. ``delta_rule`` only affects GranvilleOno.
    """

    id: str
    n_max: int
    primes: tuple[int, ...] = ()
    j: int | None = None
    k: int | None = None
    r: int | None = None
    delta_rule: str = "neg-inverse"

    def __post_init__(self):
        object.__setattr__(self, "id", family_id(self.id))
        object.__setattr__(self, "primes", tuple(int(p) for p in self.primes))

    @property
    def p(self) -> int:
        if len(self.primes) != 1:
            raise HypothesisError(f"{self.id} takes exactly one prime, got {self.primes}")
        return self.primes[0]

    def params(self) -> dict:
        out = {"n_max": self.n_max}
        if self.primes:
            out["primes"] = list(self.primes)
        for name in ("j", "k", "r"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        if self.id == "GranvilleOno":
            out["delta_rule"] = self.delta_rule
        return out

    def label(self) -> str:
        bits = []
        if self.primes:
            bits.append("p=" + ",".join(map(str, self.primes)))
        for name in ("j", "k", "r"):
            value = getattr(self, name)
            if value is not None:
                bits.append(f"{name}={value}")
        bits.append(f"n<={self.n_max}")
        return f"{self.id}[{'; '.join(bits)}]"


@dataclass(frozen=True)
class Term:
    """source((A*n + B) / divisor), read as 0 when the division is not exact."""

    source: str  # "a" (needs t), "b", "c", "das", "hs3"
    A: int
    B: int
    t: int | None = None
    divisor: int = 1

    def argument(self, n: int) -> int:
        return self.A * n + self.B

    def __str__(self):
        name = f"a_{self.t}" if self.source == "a" else self.source
        if self.A == 1 and self.B == 0:
            arg = "n"
        elif self.B == 0:
            arg = f"{self.A}n"
        else:
            sign = "+" if self.B > 0 else "-"
            lead = "n" if self.A == 1 else f"{self.A}n"
            arg = f"{lead}{sign}{abs(self.B)}"
        if self.divisor != 1:
            arg = f"({arg})/{self.divisor}"
        return f"{name}({arg})"


@dataclass(frozen=True)
class Vanishing:
    """term(n) = 0 exactly (modulus None) or mod ``modulus``."""

    term: Term
    modulus: int | None
    n_start: int = 0
    kind = "Vanishing"

    @property
    def terms(self):
        return (self.term,)

    def __str__(self):
        return f"{self.term} == 0" + _mod_suffix(self.modulus)


@dataclass(frozen=True)
class Relation:
    """lhs(n) = sign * rhs(n) mod ``modulus``."""

    lhs: Term
    sign: int
    rhs: Term
    modulus: int
    n_start: int = 0
    kind = "Relation"

    @property
    def terms(self):
        return (self.lhs, self.rhs)

    def __str__(self):
        s = "" if self.sign == 1 else "-"
        return f"{self.lhs} == {s}{self.rhs}" + _mod_suffix(self.modulus)


@dataclass(frozen=True)
class SeriesCongruence:
    """Coefficientwise lhs(n) = rhs(n) mod ``modulus``."""

    lhs: Term
    rhs: Term
    modulus: int
    n_start: int = 0
    kind = "SeriesCongruence"

    @property
    def terms(self):
        return (self.lhs, self.rhs)

    @property
    def sign(self):
        return 1

    def __str__(self):
        return f"{self.lhs} == {self.rhs}" + _mod_suffix(self.modulus)


@dataclass(frozen=True)
class ScaledIdentity:
    """lhs(n) = factor * rhs(n) over Z."""

    lhs: Term
    factor: int
    rhs: Term
    n_start: int = 0
    kind = "ScaledIdentity"
    modulus = None

    @property
    def terms(self):
        return (self.lhs, self.rhs)

    def __str__(self):
        return f"{self.lhs} == {self.factor}*{self.rhs}"


def _mod_suffix(m):
    return "" if m is None else f" (mod {m})"


# -- parameter tables -----------------------------------------------------------


def _require(cond, message):
    if not cond:
        raise HypothesisError(message)


def _require_prime(p, minimum=2):
    _require(is_prime(p), f"{p} is not prime")
    _require(p >= minimum, f"prime {p} must be >= {minimum}")


def epsilon_p(p: int) -> int:
    """1 if p != 1 (mod 8), 8 if p = 1 (mod 8)."""
    _require_prime(p, 3)
    return 8 if p % 8 == 1 else 1


def delta_p_selector(p: int) -> int:
    """-(-2/p) if p != 1 (mod 8), p if p = 1 (mod 8)."""
    _require_prime(p, 3)
    return p if p % 8 == 1 else -kronecker(-2, p)


def granville_ono_delta(p: int, j: int, rule: str = "neg-inverse") -> int:
    """Least positive delta with 24*delta = -1 (neg-inverse) or +1 (inverse) mod p^j."""
    if rule not in DELTA_RULES:
        raise HypothesisError(f"unknown delta rule {rule!r}")
    inv = pow(24, -1, p**j)
    return (-inv) % p**j if rule == "neg-inverse" else inv


def granville_ono_modulus(p: int, j: int) -> int:
    return {5: 5**j, 7: 7 ** (j // 2 + 1), 11: 11**j}[p]


def _exact_div(num, den, what):
    _require(num % den == 0, f"{what} = {num}/{den} is not an integer")
    return num // den


def _j_values(inst, p):
    if inst.j is None:
        return list(range(1, p))
    _require(inst.j % p != 0, f"j={inst.j} must not be divisible by {p}")
    return [inst.j]


def _k_value(inst, minimum):
    _require(inst.k is not None, f"{inst.id} needs k")
    _require(inst.k >= minimum, f"k={inst.k} must be >= {minimum}")
    return inst.k


# -- compile --------------------------------------------------------------------


def compile(inst: FamilyInstance) -> list:
    """Expand a family instance into explicit claims; raises HypothesisError."""
    _require(inst.n_max >= 0, "n_max must be non-negative")
    claims = _COMPILERS[inst.id](inst)
    for claim in claims:
        for term in claim.terms:
            _require(term.A >= 1, f"{term}: slope must be positive")
            _require(
                term.argument(claim.n_start) >= 0,
                f"{term}: negative argument at n={claim.n_start}",
            )
    return claims


def _hs3(inst):
    return [SeriesCongruence(Term("a", 1, 0, t=3), Term("hs3", 1, 0), 2)]


def _eq5711(inst):
    p = inst.p
    _require(p in (5, 7, 11), f"p={p} must be one of 5, 7, 11")
    _require(inst.j is not None and inst.j >= 1, "j must be a positive integer")
    pj = p**inst.j
    shift = (p * p - 1) // 24
    return [Vanishing(Term("a", pj, -shift, t=p), pj, n_start=1)]


def _granville_ono(inst):
    p = inst.p
    _require(p in (5, 7, 11), f"p={p} must be one of 5, 7, 11")
    _require(inst.j is not None and inst.j >= 1, "j must be a positive integer")
    pj = p**inst.j
    delta = granville_ono_delta(p, inst.j, inst.delta_rule)
    return [Vanishing(Term("a", pj, -delta, t=pj), granville_ono_modulus(p, inst.j), n_start=1)]


def _lem4e2(inst):
    p = inst.p
    _require_prime(p)
    _require(p % 8 != 1, f"p={p} must not be 1 mod 8")
    sign = -kronecker(-2, p)
    return [ScaledIdentity(Term("b", p, 0), sign, Term("b", 1, 0, divisor=p))]


def _lem4e3(inst):
    p = inst.p
    _require_prime(p)
    _require(p % 8 != 1, f"p={p} must not be 1 mod 8")
    sign = -kronecker(-2, p)
    claims = []
    for j in _j_values(inst, p):
        claims.append(Vanishing(Term("b", p * p, p * j), None))
        # the same coefficient through the Lem4e2 identity at index p*n + j
        claims.append(ScaledIdentity(Term("b", p * p, p * j), sign, Term("b", p, j, divisor=p)))
    return claims


def _lem4e6(inst):
    p = inst.p
    _require_prime(p)
    _require(p % 4 == 1, f"p={p} must be 1 mod 4")
    return [ScaledIdentity(Term("c", p * p, (p * p - 1) // 8), p, Term("c", 1, 0))]


def _lem4e7(inst):
    # c(p*n + (p^2-1)/8) = 0 for p not dividing n; n = p*m + i covers those n.
    p = inst.p
    _require_prime(p)
    _require(p % 4 == 1, f"p={p} must be 1 mod 4")
    base = (p * p - 1) // 8
    return [Vanishing(Term("c", p * p, p * i + base), None) for i in range(1, p)]


def _lem4e8(inst):
    p = inst.p
    _require_prime(p, 3)
    base = (p * p - 1) // 8
    return [Vanishing(Term("a", p * p, p * j + base, t=2), 2) for j in _j_values(inst, p)]


def _lem4e9(inst):
    p = inst.p
    _require_prime(p, 3)
    return [
        Relation(
            Term("a", p * p, (p * p - 1) // 8, t=2), delta_p_selector(p), Term("a", 1, 0, t=2), 2
        )
    ]


def _lem4e10(inst):
    p = inst.p
    eps = epsilon_p(p)
    return [
        Vanishing(Term("a", 104 * p * p, 13 * p * (eps * j + p) - 7, t=13), 2)
        for j in _j_values(inst, p)
    ]


def _lem4e11(inst):
    p = inst.p
    return [
        Relation(
            Term("a", 104 * p * p, 13 * p * p - 7, t=13),
            delta_p_selector(p),
            Term("a", 104, 6, t=13),
            2,
        )
    ]


def _das(inst):
    return [SeriesCongruence(Term("a", 104, 6, t=13), Term("das", 1, 0), 2)]


def _chain4e13(inst):
    a2 = Term("a", 1, 0, t=2)
    return [
        SeriesCongruence(a2, Term("a", 104, 6, t=13), 2),
        SeriesCongruence(a2, Term("b", 8, 1), 2),
    ]


def _chain4e18(inst):
    a2 = Term("a", 1, 0, t=2)
    return [
        SeriesCongruence(a2, Term("a", 104, 6, t=13), 2),
        SeriesCongruence(a2, Term("c", 1, 0), 2),
    ]


def _thm1_parts(inst):
    _require(len(inst.primes) >= 1, f"{inst.id} needs at least one prime")
    for p in inst.primes:
        _require_prime(p, 5)
    *head, last = inst.primes
    _require(inst.j is not None, f"{inst.id} needs j")
    _require(inst.j % last != 0, f"j={inst.j} must not be divisible by p_(k+1)={last}")
    return prod(p * p for p in head), last


def _thm1i(inst):
    Q, p = _thm1_parts(inst)
    B = _exact_div(Q * p * (8 * inst.j + p) - 1, 8, "offset")
    return [Vanishing(Term("a", Q * p * p, B, t=2), 2)]


def _thm1ii(inst):
    Q, p = _thm1_parts(inst)
    eps = epsilon_p(p)
    return [Vanishing(Term("a", 104 * Q * p * p, 13 * Q * p * (eps * inst.j + p) - 7, t=13), 2)]


def _coro2_parts(inst):
    p = inst.p
    _require_prime(p, 5)
    k = _k_value(inst, 0)
    _require(inst.j is not None, f"{inst.id} needs j")
    _require(inst.j % p != 0, f"j={inst.j} must not be divisible by {p}")
    return p, k


def _coro2i(inst):
    p, k = _coro2_parts(inst)
    top = p ** (2 * k + 2)
    B = p ** (2 * k + 1) * inst.j + _exact_div(top - 1, 8, "offset")
    return [Vanishing(Term("a", top, B, t=2), 2)]


def _coro2ii(inst):
    p, k = _coro2_parts(inst)
    top = p ** (2 * k + 2)
    B = 13 * epsilon_p(p) * p ** (2 * k + 1) * inst.j + 13 * top - 7
    return [Vanishing(Term("a", 104 * top, B, t=13), 2)]


def _thm3_parts(inst):
    p = inst.p
    _require_prime(p)
    _require(p % 8 == 7, f"p={p} must be 7 mod 8")
    k = _k_value(inst, 1)
    _require(inst.r is not None and inst.r >= 0, "r must be a non-negative integer")
    _require((8 * inst.r + 7) % p == 0, f"p={p} must divide 8r+7={8 * inst.r + 7}")
    return p, k, inst.r, -kronecker(-2, p)


def _thm3i(inst):
    p, k, r, sign = _thm3_parts(inst)
    lhs = Term("a", p ** (k + 1), p * r + _exact_div(7 * p - 1, 8, "(7p-1)/8"), t=2)
    rhs = Term("a", p ** (k - 1), _exact_div(8 * r + 7 - p, 8 * p, "(8r+7-p)/(8p)"), t=2)
    return [Relation(lhs, sign, rhs, 2)]


def _thm3ii(inst):
    p, k, r, sign = _thm3_parts(inst)
    lhs = Term("a", 104 * p ** (k + 1), 104 * p * r + 91 * p - 7, t=13)
    rhs = Term("a", 104 * p ** (k - 1), _exact_div(104 * r + 91, p, "(104r+91)/p") - 7, t=13)
    return [Relation(lhs, sign, rhs, 2)]


def _coro4_parts(inst):
    p = inst.p
    _require_prime(p)
    _require(p % 8 == 7, f"p={p} must be 7 mod 8")
    k = _k_value(inst, 1)
    return p, k, (-kronecker(-2, p)) ** k


def _coro4i(inst):
    p, k, sign = _coro4_parts(inst)
    top = p ** (2 * k)
    lhs = Term("a", top, _exact_div(top - 1, 8, "(p^2k-1)/8"), t=2)
    return [Relation(lhs, sign, Term("a", 1, 0, t=2), 2)]


def _coro4ii(inst):
    p, k, sign = _coro4_parts(inst)
    top = p ** (2 * k)
    lhs = Term("a", 104 * top, 13 * top - 7, t=13)
    return [Relation(lhs, sign, Term("a", 104, 6, t=13), 2)]


_COMPILERS = {
    "HS3": _hs3,
    "Eq5711": _eq5711,
    "GranvilleOno": _granville_ono,
    "Lem4e2": _lem4e2,
    "Lem4e3": _lem4e3,
    "Lem4e6": _lem4e6,
    "Lem4e7": _lem4e7,
    "Lem4e8": _lem4e8,
    "Lem4e9": _lem4e9,
    "Lem4e10": _lem4e10,
    "Lem4e11": _lem4e11,
    "Das": _das,
    "Chain4e13": _chain4e13,
    "Chain4e18": _chain4e18,
    "Thm1i": _thm1i,
    "Thm1ii": _thm1ii,
    "Coro2i": _coro2i,
    "Coro2ii": _coro2ii,
    "Thm3i": _thm3i,
    "Thm3ii": _thm3ii,
    "Coro4i": _coro4i,
    "Coro4ii": _coro4ii,
}


# -- coefficient supply -----------------------------------------------------------


@dataclass(frozen=True)
class Budget:
    """Largest coefficient index a sweep may request, per ring."""

    mod2: int = 200_000
    exact: int = 50_000

    @classmethod
    def uniform(cls, limit: int) -> Budget:
        return cls(limit, limit)

    def limit(self, ring: Ring) -> int:
        return self.mod2 if ring.modulus == 2 else self.exact


class SeriesBank:
    """Caches named series per (source, t, ring), regrowing on demand."""

    def __init__(self, budget: Budget | None = None):
        self.budget = budget or Budget()
        self._cache = {}

    def _build(self, source, t, ring, length):
        if source == "a":
            return tcore_series(t, length, ring).coeffs
        if source == "b":
            return b_series(length, ring).coeffs
        if source == "c":
            return c_series(length, ring).coeffs
        if source == "das":
            return das_series(length, ring).coeffs
        raise ValueError(f"unknown series {source!r}")

    def coefficients(self, source: str, t: int | None, ring: Ring, length: int) -> np.ndarray:
        limit = self.budget.limit(ring)
        if length - 1 > limit:
            name = f"a_{t}" if source == "a" else source
            raise BudgetExceeded(f"{name} over {ring}", length, limit)
        key = (source, t, ring)
        have = self._cache.get(key)
        if have is None or len(have) < length:
            grow = length if have is None else max(length, min(2 * len(have), limit + 1))
            have = self._build(source, t, ring, grow)
            self._cache[key] = have
        return have

    def values(self, term: Term, ring: Ring, ns: np.ndarray):
        """Evaluate ``term`` at every n in ``ns``; returns (values, backend)."""
        args = term.A * ns + term.B
        if term.divisor != 1:
            hit = args % term.divisor == 0
            args = np.where(hit, args // term.divisor, 0)
        else:
            hit = None
        top = int(args.max()) if len(args) else 0
        if term.source == "hs3":
            vals, backend = hs3_indicator_array(args), "closed-form"
        elif term.source == "a" and term.t == 2 and top > self.budget.limit(ring):
            vals, backend = a2_closed_array(args), "closed-form"
        else:
            series = self.coefficients(term.source, term.t, ring, top + 1)
            vals, backend = series[args], "series"
        if ring.modulus is not None:
            vals = np.asarray(vals, dtype=np.int64) % ring.modulus
        if hit is not None:
            vals = np.where(hit, vals, 0)
        return vals, backend


def claim_ring(claim) -> Ring:
    return EXACT if claim.modulus is None else Mod(claim.modulus)


def fit_n_max(inst: FamilyInstance, cap: int, budget: Budget | None = None) -> int | None:
    """Largest n_max <= cap whose series lookups stay inside the budget."""
    budget = budget or Budget()
    best = cap
    for claim in compile(replace(inst, n_max=cap)):
        limit = budget.limit(claim_ring(claim))
        for term in claim.terms:
            if term.source == "hs3" or (term.source == "a" and term.t == 2):
                continue
            best = min(best, (limit * term.divisor - term.B) // term.A)
    return best if best >= _n_start(inst) else None


def _n_start(inst):
    return 1 if inst.id in ("Eq5711", "GranvilleOno") else 0


# -- verification ---------------------------------------------------------------


@dataclass
class Counterexample:
    claim: int
    n: int
    lhs: int
    rhs: int


@dataclass
class VerificationReport:
    instance: FamilyInstance
    claims: list
    n_checked: int
    requested: int
    failures: int
    counterexamples: list[Counterexample] = field(default_factory=list)
    backends: dict[str, str] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def status(self) -> str:
        ok = self.failures == 0 and not self.counterexamples and self.n_checked == self.requested
        return "pass" if ok else "fail"

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _check(claim, bank, ns):
    ring = claim_ring(claim)
    lhs_term = claim.terms[0]
    lhs, b1 = bank.values(lhs_term, ring, ns)
    backends = {str(lhs_term): b1}
    if isinstance(claim, Vanishing):
        rhs = np.zeros(len(ns), dtype=np.int64)
    else:
        raw, b2 = bank.values(claim.rhs, ring, ns)
        backends[str(claim.rhs)] = b2
        factor = claim.factor if isinstance(claim, ScaledIdentity) else claim.sign
        rhs = raw * factor
    if claim.modulus is None:
        bad = np.flatnonzero(lhs != rhs)
    else:
        bad = np.flatnonzero((lhs - rhs) % claim.modulus != 0)
    return bad, lhs, rhs, backends


def verify(inst: FamilyInstance, budget: Budget | None = None, bank: SeriesBank | None = None) -> VerificationReport:
    start = time.perf_counter()
    bank = bank or SeriesBank(budget)
    claims = compile(inst)
    n_start = claims[0].n_start if claims else 0
    ns = np.arange(n_start, inst.n_max + 1, dtype=np.int64)
    report = VerificationReport(inst, claims, 0, len(ns), 0)
    for index, claim in enumerate(claims):
        bad, lhs, rhs, backends = _check(claim, bank, ns)
        report.backends.update(backends)
        report.failures += len(bad)
        for i in bad[:COUNTEREXAMPLE_CAP].tolist():
            report.counterexamples.append(Counterexample(index, int(ns[i]), int(lhs[i]), int(rhs[i])))
    report.n_checked = len(ns)
    report.wall_time = time.perf_counter() - start
    return report


# -- default suite ----------------------------------------------------------------


def default_suite(budget: Budget | None = None) -> list[FamilyInstance]:
    budget = budget or Budget()
    suite = [FamilyInstance("HS3", 2000)]
    for j, n_max in ((1, 300), (2, 50)):
        for p in (5, 7, 11):
            suite.append(FamilyInstance("Eq5711", n_max, (p,), j=j))
    for j, n_max in ((1, 300), (2, 50)):
        for p in (5, 7, 11):
            suite.append(FamilyInstance("GranvilleOno", n_max, (p,), j=j))
    suite += [
        FamilyInstance("Das", 200),
        FamilyInstance("Chain4e13", 200),
        FamilyInstance("Chain4e18", 200),
    ]
    for p in (3, 5, 7, 11, 13, 19, 23):
        suite.append(FamilyInstance("Lem4e2", budget.exact // p, (p,)))
    for p in (3, 5, 7, 11, 13, 19, 23):
        suite.append(FamilyInstance("Lem4e3", (budget.exact - p * (p - 1)) // (p * p), (p,)))
    for p in (5, 13, 17, 29):
        suite.append(FamilyInstance("Lem4e6", (budget.exact - (p * p - 1) // 8) // (p * p), (p,)))
    for p in (5, 13, 17, 29):
        top = p * (p - 1) + (p * p - 1) // 8
        suite.append(FamilyInstance("Lem4e7", (budget.exact - top) // (p * p), (p,)))

    aux_primes = (3, 5, 7, 17)
    for p in aux_primes:
        js = [None] if p == aux_primes[0] else [1, 2]
        for j in js:
            suite.append(FamilyInstance("Lem4e8", 200, (p,), j=j))
    for p in aux_primes:
        suite.append(FamilyInstance("Lem4e9", 200, (p,)))
    for p in aux_primes:
        js = [None] if p == aux_primes[0] else [1, 2]
        for j in js:
            suite.append(_fitted(FamilyInstance("Lem4e10", 0, (p,), j=j), 50, budget))
    for p in aux_primes:
        suite.append(_fitted(FamilyInstance("Lem4e11", 0, (p,)), 50, budget))

    suite += [FamilyInstance("Thm1i", 200, (5,), j=j) for j in range(1, 5)]
    suite += [FamilyInstance("Thm1i", 200, (7,), j=j) for j in range(1, 7)]
    suite += [FamilyInstance("Thm1i", 40, (5, 7), j=j) for j in (1, 2)]
    suite += [FamilyInstance("Thm1ii", 15, (5,), j=j) for j in (1, 2)]
    suite.append(FamilyInstance("Thm1ii", 5, (17,), j=1))

    for k in (0, 1):
        for j in (1, 2):
            suite.append(FamilyInstance("Coro2i", 200, (5,), j=j, k=k))
    for k in (0, 1):
        for j in (1, 2):
            suite.append(_fitted(FamilyInstance("Coro2ii", 0, (5,), j=j, k=k), 100, budget))

    for p in (7, 23, 31):
        r0 = (p - 7) // 8
        for k in (1, 2):
            for r in (r0, r0 + p):
                suite.append(FamilyInstance("Thm3i", 500, (p,), k=k, r=r))
    for p in (7, 23, 31):
        r0 = (p - 7) // 8
        for k in (1, 2):
            for r in (r0, r0 + p):
                suite.append(_fitted(FamilyInstance("Thm3ii", 0, (p,), k=k, r=r), 100, budget))
    for p in (7, 23, 31):
        for k in (1, 2):
            suite.append(FamilyInstance("Coro4i", 500, (p,), k=k))
    for p in (7, 23, 31):
        for k in (1, 2):
            suite.append(_fitted(FamilyInstance("Coro4ii", 0, (p,), k=k), 100, budget))
    return [inst for inst in suite if inst is not None]


def _fitted(inst, cap, budget):
    n_max = fit_n_max(inst, cap, budget)
    return None if n_max is None else replace(inst, n_max=n_max)


# -- running many -----------------------------------------------------------------


@dataclass
class SuiteEntry:
    instance: FamilyInstance
    report: VerificationReport | None = None
    error: str | None = None

    @property
    def status(self) -> str:
        return "error" if self.report is None else self.report.status


_worker_bank = None


def _run_one(inst, budget, bank=None):
    try:
        return SuiteEntry(inst, verify(inst, budget, bank))
    except (HypothesisError, BudgetExceeded) as exc:
        return SuiteEntry(inst, error=str(exc))


def _worker(args):
    global _worker_bank
    inst, budget = args
    if _worker_bank is None or _worker_bank.budget != budget:
        _worker_bank = SeriesBank(budget)
    return _run_one(inst, budget, _worker_bank)


def verify_many(instances, budget: Budget | None = None, jobs: int = 1) -> list[SuiteEntry]:
    """Verify instances, returning entries in input order whatever ``jobs`` is."""
    budget = budget or Budget()
    instances = list(instances)
    if jobs <= 1:
        bank = SeriesBank(budget)
        return [_run_one(inst, budget, bank) for inst in instances]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_worker, [(inst, budget) for inst in instances]))
