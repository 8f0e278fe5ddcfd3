"""Acceptance gate: one test per criterion, each reported as a PASS/FAIL line.

The summary lines are printed by the ``pytest_terminal_summary`` hook in
conftest.py; every test here carries ``criterion(N, title)``.
"""

import time
from collections import Counter

import numpy as np
import pytest

from tcore.cli import main
from tcore.congruences import FamilyInstance, default_suite, verify_many
from tcore.generators import b_series, c_series, das_series, tcore_series
from tcore.modular import (
    CharacterSpec,
    EtaQuotient,
    admissibility_check,
    cusp_order,
    eigen_check,
    gamma0_index,
    kronecker,
)
from tcore.partitions import Partition, a_t_bruteforce, core_counts, hook_numbers, is_t_core
from tcore.series import EXACT, Mod

criterion = pytest.mark.criterion


def _assert_all_pass(instances, budget=None):
    entries = verify_many(instances, budget)
    bad = [
        (e.instance.label(), e.error or [(c.n, c.lhs, c.rhs) for c in e.report.counterexamples])
        for e in entries
        if e.status != "pass"
    ]
    assert not bad, bad
    return entries


@criterion(1, "t-core series equals brute-force hook counting (n<=30, t=2..13)")
def test_c01_oracle_equivalence():
    start = time.perf_counter()
    series = {t: tcore_series(t, 31, EXACT) for t in range(2, 14)}
    for n in range(31):
        counts = core_counts(n, range(2, 14))
        for t in range(2, 14):
            assert series[t][n] == counts[t], (t, n)
    assert time.perf_counter() - start < 10


@criterion(2, "b(n) expansion prefix q - q^9 - 2q^17 + ...")
def test_c02_b_prefix():
    b = b_series(101, EXACT)
    assert (b[1], b[9], b[17]) == (1, -1, -2)
    assert all(b[n] == 0 for n in range(101) if n % 8 != 1)


@criterion(3, "hook numbers of (6,3,1), t-core status, a_3(7)=0")
def test_c03_worked_examples():
    lam = Partition((6, 3, 1))
    assert hook_numbers(lam) == Counter([8, 6, 5, 3, 2, 1, 4, 2, 1, 1])
    cores = [t for t in range(2, 21) if is_t_core(lam, t)]
    assert cores == [7] + list(range(9, 21))
    assert a_t_bruteforce(7, 3) == 0 and tcore_series(3, 8)[7] == 0


@criterion(4, "b(pn) = -(-2/p) b(n/p) and b(p^2 n + pj) = 0 up to 5e4")
def test_c04_b_lemmas():
    start = time.perf_counter()
    limit = 50_000
    b = b_series(limit + 1, EXACT).data.coeffs
    for p in (3, 5, 7, 11, 13, 19, 23):
        sign = -kronecker(-2, p)
        for n in range(limit // p + 1):
            expected = sign * b[n // p] if n % p == 0 else 0
            assert b[p * n] == expected, (p, n)
        for j in range(1, p):
            args = np.arange(p * j, limit + 1, p * p)
            assert not np.any(b[args].astype(np.int64)), (p, j)
    insts = [i for i in default_suite() if i.id in ("Lem4e2", "Lem4e3")]
    assert len(insts) == 14
    _assert_all_pass(insts)
    assert time.perf_counter() - start < 30


@criterion(5, "c(p^2 n + (p^2-1)/8) = p c(n) and c(pn + (p^2-1)/8) = 0 for p not dividing n")
def test_c05_c_lemmas():
    limit = 50_000
    c = c_series(limit + 1, EXACT).data.coeffs
    for p in (5, 13, 17, 29):
        base = (p * p - 1) // 8
        for n in range((limit - base) // (p * p) + 1):
            assert c[p * p * n + base] == p * c[n], (p, n)
        for n in range((limit - base) // p + 1):
            if n % p:
                assert c[p * n + base] == 0, (p, n)
    _assert_all_pass([i for i in default_suite() if i.id in ("Lem4e6", "Lem4e7")])


@criterion(6, "parity chain a_2 = a_13(104n+6) = b(8n+1) = c(n) = das(n) mod 2, n<=200")
def test_c06_parity_chains():
    start = time.perf_counter()
    N = 201
    a2 = tcore_series(2, N, Mod(2)).data.coeffs
    a13 = tcore_series(13, 104 * (N - 1) + 7, Mod(2)).data.coeffs
    b = b_series(8 * N, Mod(2)).data.coeffs
    c = c_series(N, Mod(2)).data.coeffs
    das = das_series(N, Mod(2)).data.coeffs
    n = np.arange(N)
    for other in (a13[104 * n + 6], b[8 * n + 1], c[:N], das[:N]):
        assert np.array_equal(a2[:N], other)
    _assert_all_pass([FamilyInstance(f, 200) for f in ("Das", "Chain4e13", "Chain4e18")])
    assert time.perf_counter() - start < 60


@criterion(7, "a_2 vanishing progressions for one and two primes")
def test_c07_thm1i():
    insts = [FamilyInstance("Thm1i", 200, (5,), j=j) for j in range(1, 5)]
    insts += [FamilyInstance("Thm1i", 200, (7,), j=j) for j in range(1, 7)]
    insts += [FamilyInstance("Thm1i", 40, (5, 7), j=j) for j in (1, 2)]
    _assert_all_pass(insts)


@criterion(8, "a_13 vanishing progressions, including an eps=8 prime")
def test_c08_thm1ii():
    insts = [FamilyInstance("Thm1ii", 15, (5,), j=j) for j in (1, 2)]
    insts.append(FamilyInstance("Thm1ii", 5, (17,), j=1))
    _assert_all_pass(insts)


@criterion(9, "prime-power progressions for a_2 and a_13 (p=5, k in {0,1}, j in {1,2})")
def test_c09_coro2():
    insts = [i for i in default_suite() if i.id in ("Coro2i", "Coro2ii")]
    assert len(insts) == 8
    _assert_all_pass(insts)


@criterion(10, "sign-twisted relations for p = 7 mod 8 and a_2(55) = a_2(1)")
def test_c10_thm3_coro4():
    insts = [i for i in default_suite() if i.id in ("Thm3i", "Thm3ii", "Coro4i", "Coro4ii")]
    assert {i.p for i in insts} == {7, 23, 31}
    assert all(i.n_max == 500 for i in insts if i.id == "Coro4i")
    _assert_all_pass(insts)
    a2 = tcore_series(2, 56)
    assert a2[55] == a2[1] == 1


@criterion(11, "classical a_p and Granville-Ono congruences, 3-core parity")
def test_c11_classical():
    insts = [i for i in default_suite() if i.id in ("Eq5711", "GranvilleOno", "HS3")]
    assert len(insts) == 13
    assert {(i.id, i.j, i.n_max) for i in insts if i.id != "HS3"} == {
        (f, j, n) for f in ("Eq5711", "GranvilleOno") for j, n in ((1, 300), (2, 50))
    }
    _assert_all_pass(insts)


@criterion(12, "eta(8z)eta(16z): level 128 admissibility, cusp orders, Hecke eigenvalues")
def test_c12_modular_goldens():
    eq = EtaQuotient(128, {8: 1, 16: 1})
    res = admissibility_check(eq)
    assert res.weight == 1 and (res.sum_at_infinity, res.sum_at_zero) == (24, 24)
    assert res.cond_A and res.cond_B and res.character.s == 128
    assert cusp_order(eq, 1) == cusp_order(eq, 128) == 1
    assert gamma0_index(128) == 192
    b = b_series(4000, EXACT).data
    chi = CharacterSpec.from_discriminant(-128)
    for p, lam in ((3, 0), (5, 0), (7, 0), (17, -2)):
        check = eigen_check(b, p, 1, chi)
        assert check.ok and check.eigenvalue == lam, p


@criterion(13, "verify suite --json is byte-identical across runs and job counts")
def test_c13_determinism(capsys):
    outputs = []
    for argv in (["verify", "suite", "--json"], ["verify", "suite", "--json"], ["verify", "suite", "--json", "--jobs", "2"]):
        main(argv)
        outputs.append(capsys.readouterr().out)
    assert outputs[0] and outputs[0] == outputs[1] == outputs[2]
