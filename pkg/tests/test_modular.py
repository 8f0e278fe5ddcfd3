from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tcore.generators import b_series
from tcore.modular import (
    CharacterSpec,
    EtaQuotient,
    admissibility_check,
    character_of,
    cusp_order,
    divisors,
    eigen_check,
    eta_expansion,
    gamma0_index,
    hecke_Tp,
    is_prime,
    kronecker,
)
from tcore.series import EXACT, Mod, TruncatedSeries, zeros

ETA_8_16 = EtaQuotient(128, {8: 1, 16: 1})
CHI_128 = CharacterSpec.from_discriminant(-128)
SMALL_PRIMES = [p for p in range(3, 200) if is_prime(p)]


def euler_criterion(a, p):
    """Legendre symbol for odd prime p by brute force."""
    if a % p == 0:
        return 0
    return 1 if any((x * x - a) % p == 0 for x in range(1, p)) else -1


def test_kronecker_examples():
    assert kronecker(-2, 7) == euler_criterion(-2, 7) == -1
    assert kronecker(-128, 3) == kronecker(-2, 3) == euler_criterion(-2, 3) == 1
    assert all(kronecker(a, 1) == 1 for a in range(-20, 21))


def test_kronecker_special_denominators():
    assert kronecker(1, 0) == kronecker(-1, 0) == 1
    assert kronecker(2, 0) == 0 and kronecker(0, 0) == 0
    assert kronecker(4, 2) == 0
    # (a/2) from the 8-periodic table, (a/-1) = sign(a)
    assert [kronecker(a, 2) for a in (1, 3, 5, 7)] == [1, -1, -1, 1]
    assert kronecker(-3, -1) == -1 and kronecker(3, -1) == 1


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_kronecker_is_legendre_for_odd_primes(p):
    for a in range(-p, 2 * p):
        assert kronecker(a, p) == euler_criterion(a, p)
        if a % p:
            assert kronecker(a, p) % p == pow(a, (p - 1) // 2, p)


def test_kronecker_completely_multiplicative():
    # Standard exceptions: (0/-1) = 1 breaks multiplicativity in the top at n = -1,
    # and (a/0) is only defined for the bottom value itself.
    rng = range(-50, 51)
    for a in rng:
        for b in rng:
            for n in rng:
                if n == -1 and a * b == 0:
                    continue
                assert kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n)
    for a in rng:
        for m in rng:
            for n in rng:
                if m * n == 0:
                    continue
                assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n)


def test_minus_128_matches_minus_2_on_odd_primes():
    assert all(kronecker(-128, p) == kronecker(-2, p) for p in SMALL_PRIMES)


def test_gamma0_index():
    assert gamma0_index(1) == 1
    assert gamma0_index(2) == 3
    assert gamma0_index(128) == 192
    assert gamma0_index(6) == 12
    with pytest.raises(ValueError):
        gamma0_index(0)


def test_eta_quotient_validation():
    with pytest.raises(ValueError):
        EtaQuotient(24, {5: 1})
    with pytest.raises(ValueError):
        EtaQuotient(24, {8: 0})


def test_admissibility_of_b_form():
    res = admissibility_check(ETA_8_16)
    assert res.weight == 1 and res.weight_integral
    assert (res.sum_at_infinity, res.sum_at_zero) == (24, 24)
    assert res.cond_A and res.cond_B
    assert res.character.s == 128 and res.character.discriminant == -128
    assert res.min_cusp_order == 1 and res.holomorphic_at_cusps and res.modular


def test_admissibility_failures_are_reported():
    res = admissibility_check(EtaQuotient(1, {1: 3}))
    assert not res.cond_A and res.sum_at_infinity == 3
    half = admissibility_check(EtaQuotient(24, {24: 1}))
    assert half.cond_A and not half.weight_integral
    with pytest.raises(ValueError):
        half.character(5)


def test_character_with_negative_exponents():
    chi = character_of(EtaQuotient(4, {1: -2, 2: 6, 4: -2}))
    assert chi.s == Fraction(2**6, 16)
    chi2 = character_of(EtaQuotient(6, {2: 3, 3: -1}))
    assert chi2.discriminant == -24
    assert chi2.s == Fraction(8, 3)


def test_cusp_orders():
    assert cusp_order(ETA_8_16, 1) == 1
    assert cusp_order(ETA_8_16, 128) == 1
    assert cusp_order(ETA_8_16, 128, c=5) == 1
    with pytest.raises(ValueError):
        cusp_order(ETA_8_16, 3)


@given(
    st.sampled_from([12, 24, 36, 48, 64, 128]),
    st.data(),
)
def test_order_at_infinity(level, data):
    divs = divisors(level)
    chosen = data.draw(st.lists(st.sampled_from(divs), min_size=1, max_size=4, unique=True))
    exps = {d: data.draw(st.integers(-4, 4).filter(bool)) for d in chosen}
    eq = EtaQuotient(level, exps)
    assert cusp_order(eq, level) == Fraction(sum(d * r for d, r in exps.items()), 24)


def test_eta_expansion_reproduces_b():
    assert eta_expansion(ETA_8_16, 500) == b_series(500).data
    with pytest.raises(ValueError):
        eta_expansion(EtaQuotient(1, {1: 3}), 10)


def test_hecke_examples():
    b = b_series(3000).data
    t3 = hecke_Tp(b, 3, 1, CHI_128)
    assert len(t3) == (3000 - 1) // 3 + 1
    assert t3 == zeros(len(t3))
    t17 = hecke_Tp(b, 17, 1, CHI_128)
    assert t17 == b.truncate(len(t17)).scale(-2)
    assert hecke_Tp(zeros(50), 5, 1, CHI_128) == zeros(10)
    with pytest.raises(ValueError):
        hecke_Tp(b, 4, 1, CHI_128)


def test_hecke_definition_directly():
    f = TruncatedSeries(list(range(1, 31)))
    chi = CharacterSpec.from_discriminant(-4, weight=3)
    out = hecke_Tp(f, 3, 3, chi)
    expected = [f[3 * n] + (kronecker(-4, 3) * 9 * f[n // 3] if n % 3 == 0 else 0) for n in range(10)]
    assert out.tolist() == expected


@given(
    st.lists(st.integers(-30, 30), min_size=40, max_size=40),
    st.lists(st.integers(-30, 30), min_size=40, max_size=40),
    st.sampled_from([2, 3, 5, 7]),
)
def test_hecke_linear(f, g, p):
    f, g = TruncatedSeries(f), TruncatedSeries(g)
    assert hecke_Tp(f + g, p, 1, CHI_128) == hecke_Tp(f, p, 1, CHI_128) + hecke_Tp(g, p, 1, CHI_128)


def test_eigen_check_examples():
    b = b_series(4000).data
    r3 = eigen_check(b, 3, 1, CHI_128)
    assert r3.ok and r3.eigenvalue == 0 and r3.verified_range == (4000 - 1) // 3 + 1
    assert eigen_check(b, 7, 1, CHI_128).eigenvalue == 0
    r17 = eigen_check(b, 17, 1, CHI_128)
    assert r17.ok and r17.eigenvalue == -2


def test_eigen_check_zero_for_primes_not_1_mod_8():
    b = b_series(3000).data
    for p in [2] + [p for p in SMALL_PRIMES if p <= 50 and p % 8 != 1]:
        res = eigen_check(b, p, 1, CHI_128)
        assert res.ok and res.eigenvalue == 0, p


def test_eigen_check_reports_failure():
    f = TruncatedSeries([0, 1, 1, 1, 1, 1, 1, 1, 1, 1])
    res = eigen_check(f, 3, 1, CHI_128)
    assert not res.ok and res.first_failure == 3
    with pytest.raises(ValueError):
        eigen_check(TruncatedSeries([1, 1, 0]), 2, 1, CHI_128)


def test_eigen_check_mod_ring():
    b = b_series(2000, Mod(5)).data
    res = eigen_check(b, 17, 1, CHI_128)
    assert res.ok and res.eigenvalue == 3
