import cmath
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from permsign import identities as ids
from permsign.arith import half_factorial_mod, primes_between, primitive_roots
from permsign.perms import make_tau, sign_cycles

from oracles import direct_complex_product, direct_mod_product, zeta

PRIMES_200 = primes_between(3, 200)


@given(st.lists(st.integers(0, 2**31 - 2), max_size=300), st.sampled_from([3, 13, 2**31 - 1]))
def test_prod_mod(values, p):
    assert ids.prod_mod(np.array(values, dtype=np.int64), p) == direct_mod_product(values, p)


def test_triangle_prod_small_block(monkeypatch):
    monkeypatch.setattr(ids, "_BLOCK", 5)
    p = 101
    want = direct_mod_product(((j * j - i * i) for i in range(1, 51) for j in range(i + 1, 51)), p)
    assert ids.triangle_prod_mod(lambda i, j: j * j - i * i, 50, p) == want


def test_wilson_pair_examples():
    assert math.factorial(1) * math.factorial(3) % 5 == 1
    assert math.factorial(3) * math.factorial(3) % 7 == 1
    assert ids.check_wilson_pair(13)
    assert ids.check_wilson_pair(3)


@pytest.mark.parametrize("p, expected", [(13, 8), (7, 1), (5, 3), (3, 1)])
def test_product_j2_i2_examples(p, expected):
    assert ids.product_j2_i2(p) == expected


def test_product_j2_i2_against_direct_loop():
    for p in PRIMES_200:
        h = (p - 1) // 2
        want = direct_mod_product((j * j - i * i for i in range(1, h + 1) for j in range(i + 1, h + 1)), p)
        assert ids.product_j2_i2(p) == want
        assert ids.check_product_j2_i2(p)


@pytest.mark.parametrize("g, p, s", [(2, 13, -1), (3, 7, -1), (5, 7, 1), (2, 3, 1)])
def test_sign_via_product_examples(g, p, s):
    assert ids.sign_via_product(g, p) == s


def test_sign_via_product_rejects_non_root():
    with pytest.raises(ValueError):
        ids.sign_via_product(4, 13)


def test_sign_via_product_inconsistency(monkeypatch):
    monkeypatch.setattr(ids, "product_j2_i2", lambda p: 2)
    with pytest.raises(ids.InconsistencyError):
        ids.sign_via_product(2, 13)


def test_product_j_minus_i_examples():
    assert math.factorial(1) * math.factorial(2) * math.factorial(3) % 5 == 2
    for p in (3, 5, 13, 17):
        assert ids.product_j_minus_i(p)


def test_product_j_minus_i_matches_superfactorial():
    for p in PRIMES_200:
        sf = direct_mod_product((math.factorial(k) % p for k in range(1, p - 1)), p)
        assert ids.triangle_prod_mod(lambda i, j: j - i, p - 1, p) == sf


@pytest.mark.parametrize("p", [7, 11, 23, 19, 43])
def test_mordell_examples(p):
    assert ids.check_mordell(p)


def test_mordell_values():
    assert half_factorial_mod(23) == 1
    assert half_factorial_mod(11) == 10


@pytest.mark.parametrize("p", [3, 5, 13])
def test_mordell_rejects(p):
    with pytest.raises(ValueError):
        ids.check_mordell(p)


@pytest.mark.parametrize("p", [3, 7, 11, 13, 17, 29])
def test_kohl_sigma_examples(p):
    assert ids.check_kohl_sigma(p)


@pytest.mark.parametrize("p", [5, 13, 17, 29, 37, 41])
def test_williams_currie_examples(p):
    assert ids.check_williams_currie(p)


def test_williams_currie_rejects():
    with pytest.raises(ValueError):
        ids.check_williams_currie(7)


def test_accumulator_roundtrip():
    acc = ids.ComplexAccumulator()
    zs = [1 + 2j, -3 + 0.5j, 0.25 - 1j, -1, 1j]
    for z in zs:
        acc.multiply(z)
        assert 0 <= acc.phase < 2 * math.pi
    assert cmath.isclose(acc.value(), direct_complex_product(zs), rel_tol=1e-12)
    with pytest.raises(ZeroDivisionError):
        acc.multiply(0)


def test_phase_distance():
    assert ids.phase_distance(0.0, 2 * math.pi - 1e-9) < 2e-9
    assert math.isclose(ids.phase_distance(0.0, math.pi), math.pi)


def test_upsilon_small_primes_against_direct_product():
    for p in [q for q in PRIMES_200 if q <= 31]:
        m, h = p - 1, (p - 1) // 2
        z = direct_complex_product(zeta(2 * j, m) - zeta(2 * i, m)
                                   for i in range(1, h + 1) for j in range(i + 1, h + 1))
        closed = cmath.exp(1j * math.pi * (p - 3) * (3 * p + 1) / 16) * ((p - 1) / 2) ** ((p - 1) / 4)
        assert cmath.isclose(z, closed, rel_tol=1e-9), p
        assert cmath.isclose(ids.upsilon_at_zeta(p).value(), z, rel_tol=1e-9)


def test_petrov_small_primes_against_direct_product():
    for p in [q for q in PRIMES_200 if q <= 23]:
        m = p - 1
        z = direct_complex_product(zeta(j, m) - zeta(i, m)
                                   for i in range(1, m + 1) for j in range(i + 1, m + 1))
        closed = cmath.exp(1j * math.pi * (p - 2) * (3 * p - 1) / 4) * (p - 1) ** ((p - 1) / 2)
        assert cmath.isclose(z, closed, rel_tol=1e-9), p


def test_complex_examples():
    assert cmath.isclose(ids.upsilon_at_zeta(5).value(), 2, abs_tol=1e-12)
    assert ids.upsilon_at_zeta(3).log_magnitude == 0.0
    assert cmath.isclose(ids.petrov_product(3).value(), 2, abs_tol=1e-12)
    for p in (3, 5, 13):
        assert ids.check_upsilon_complex(p, 1e-6)
        assert ids.check_petrov_complex(p, 1e-6)


def test_complex_checks_detect_wrong_target(monkeypatch):
    monkeypatch.setattr(ids, "upsilon_at_zeta", lambda P: ids.ComplexAccumulator(0.0, 1.0))
    assert not ids.check_upsilon_complex(13)


def test_complex_guard():
    with pytest.raises(ValueError):
        ids.check_petrov_complex(103)


@pytest.mark.parametrize("p, n", [(19, 0), (163, 1), (883, 3)])
def test_special_form_examples(p, n):
    assert ids.special_form_parameter(p) == n
    assert ids.check_special_form_product(p, n)


def test_special_form_rejects():
    with pytest.raises(ValueError):
        ids.check_special_form_product(23, 0)
    with pytest.raises(ValueError):
        ids.check_special_form_product(163, 0)


def test_special_form_parameter():
    assert ids.special_form_parameter(1459) == 4
    assert ids.special_form_parameter(73) is None  # 18 * 4 + 1, even square root
    assert ids.special_form_parameter(7) is None


def test_sign_via_product_small_primes():
    for p in PRIMES_200:
        for g in primitive_roots(p):
            assert ids.sign_via_product(g, p) == sign_cycles(make_tau(g, p))
