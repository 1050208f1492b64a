"""Congruences and product identities tied to the signs of sigma_g and tau_g.

Integer identities are checked exactly in ``F_p``.  The two cyclotomic
evaluations (the squared-root-of-unity product and the full Vandermonde
product at zeta = exp(2 pi i / (p-1))) are checked in floating point by
accumulating log-magnitude and phase.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .arith import (
    as_prime,
    half_factorial_mod,
    is_primitive_root,
    legendre_euler,
    power_table,
    primitive_roots,
    residue_to_sign,
    sign_to_residue,
)
from .classnum import class_number
from .perms import batch_signs, sigma_table

TWO_PI = 2.0 * math.pi
COMPLEX_MAX_P = 101

# Elements per block when reducing triangular products; keeps memory flat.
_BLOCK = 1 << 20


class InconsistencyError(ArithmeticError):
    """A quantity that must be a sign mod p came out as something else."""


def prod_mod(values: np.ndarray, p: int) -> int:
    """Product of int64 residues mod ``p`` (``p < 2**31``) by pairwise halving."""
    v = np.asarray(values, dtype=np.int64) % p
    if v.size == 0:
        return 1 % p
    while v.size > 1:
        if v.size % 2:
            v = np.append(v, 1)
        v = v[0::2] * v[1::2] % p
    return int(v[0])


def triangle_prod_mod(f, m: int, p: int) -> int:
    """``prod_{1 <= i < j <= m} f(i, j) mod p`` for a vectorised ``f``.

    ``f`` receives matching int64 arrays ``i`` and ``j`` and returns
    residues (any sign) as int64.
    """
    acc = 1 % p
    i = 1
    while i < m:
        rows = []
        size = 0
        while i < m and (not rows or size + (m - i) <= _BLOCK):
            rows.append(i)
            size += m - i
            i += 1
        ii = np.concatenate([np.full(m - r, r, dtype=np.int64) for r in rows])
        jj = np.concatenate([np.arange(r + 1, m + 1, dtype=np.int64) for r in rows])
        acc = acc * prod_mod(f(ii, jj) % p, p) % p
    return acc


def check_wilson_pair(p) -> bool:
    """``k! (p-1-k)! = (-1)**(k+1) mod p`` for every ``1 <= k <= p-2``."""
    P = as_prime(p)
    p = P.p
    fact = [1] * p
    for k in range(1, p):
        fact[k] = fact[k - 1] * k % p
    return all(
        fact[k] * fact[p - 1 - k] % p == sign_to_residue((-1) ** (k + 1), p)
        for k in range(1, p - 1)
    )


def product_j2_i2(p) -> int:
    """``prod_{1 <= i < j <= h} (j**2 - i**2) mod p``."""
    P = as_prime(p)
    return triangle_prod_mod(lambda i, j: j * j - i * i, P.h, P.p)


def expected_product_j2_i2(p) -> int:
    P = as_prime(p)
    return (-half_factorial_mod(P)) % P.p if P.p % 4 == 1 else 1


def check_product_j2_i2(p) -> bool:
    return product_j2_i2(p) == expected_product_j2_i2(p)


def squared_power_product(g: int, p) -> int:
    """``prod_{1 <= i < j <= h} (g**(2j) - g**(2i)) mod p``."""
    P = as_prime(p)
    # sq[k] = g^(2k) for k = 0..h
    sq = np.concatenate([[1], power_table(g * g % P.p, P.h, P.p)])
    return triangle_prod_mod(lambda i, j: sq[j] - sq[i], P.h, P.p)


def sign_via_product(g: int, p) -> int:
    """Sign of tau_g from the Vandermonde-style quotient over the squares, in ``F_p``."""
    P = as_prime(p)
    if not is_primitive_root(g, P):
        raise ValueError(f"{g} is not a primitive root mod {P.p}")
    num = squared_power_product(g, P)
    den = product_j2_i2(P)
    s = residue_to_sign(num * pow(den, -1, P.p), P.p)
    if s is None:
        raise InconsistencyError(f"product quotient for g={g}, p={P.p} is not +-1 mod p")
    return s


def product_j_minus_i(p) -> bool:
    """``prod_{1 <= i < j <= p-1} (j - i) = (-1)**((p*p-9)/8) * h! mod p``."""
    P = as_prime(p)
    lhs = triangle_prod_mod(lambda i, j: j - i, P.p - 1, P.p)
    sign = (-1) ** ((P.p * P.p - 9) // 8)
    return lhs == sign_to_residue(sign, P.p) * half_factorial_mod(P) % P.p


def check_mordell(p) -> bool:
    """``h! = (-1)**((h(-p)+1)/2) mod p`` for primes ``p = 3 mod 4``, ``p > 3``."""
    P = as_prime(p)
    if P.p % 4 != 3:
        raise ValueError(f"Mordell's congruence needs p = 3 mod 4, got {P.p}")
    if P.p == 3:
        raise ValueError("Mordell's congruence needs p > 3")
    h = class_number(-P.p)
    if h % 2 == 0:
        return False
    return half_factorial_mod(P) == sign_to_residue((-1) ** ((h + 1) // 2), P.p)


def _sigma_signs(p: int, roots) -> list[int]:
    return batch_signs(sigma_table(roots, p)).tolist()


def check_kohl_sigma(p) -> bool:
    """Equal even/odd split of sign(sigma_g) when p = 1 mod 4; sign(sigma_g) = -h! mod p otherwise."""
    P = as_prime(p)
    signs = _sigma_signs(P.p, primitive_roots(P))
    if P.p % 4 == 1:
        return signs.count(1) == signs.count(-1)
    target = (-half_factorial_mod(P)) % P.p
    return all(sign_to_residue(s, P.p) == target for s in signs)


def check_williams_currie(p) -> bool:
    """Power of 2 congruences for p = 1 mod 4, with h the class number of discriminant -4p."""
    P = as_prime(p)
    p = P.p
    if p % 4 != 1:
        raise ValueError(f"Williams-Currie congruences need p = 1 mod 4, got {p}")
    h = class_number(-4 * p)
    lhs = pow(2, (p - 1) // 4, p)
    if p % 8 == 1:
        if h % 4:
            return False
        exponent = h // 4 + (p - 1) // 8
    else:
        if h % 4 != 2:
            return False
        lhs = lhs * half_factorial_mod(P) % p
        exponent = (h + 2) // 4 + (p - 5) // 8
    return lhs == sign_to_residue((-1) ** exponent, p)


@dataclass
class ComplexAccumulator:
    """Running product kept as ``exp(log_magnitude + i * phase)``."""

    log_magnitude: float = 0.0
    phase: float = 0.0

    def multiply(self, z: complex) -> None:
        if z == 0:
            raise ZeroDivisionError("zero factor in a log-space product")
        self.log_magnitude += math.log(abs(z))
        self.phase = (self.phase + cmath.phase(z)) % TWO_PI

    def value(self) -> complex:
        return cmath.rect(math.exp(self.log_magnitude), self.phase)


def phase_distance(x: float, y: float) -> float:
    d = (x - y) % TWO_PI
    return min(d, TWO_PI - d)


def _root_of_unity(k: int, m: int) -> complex:
    return cmath.exp(1j * TWO_PI * (k % m) / m)


def upsilon_at_zeta(p) -> ComplexAccumulator:
    """Log-space ``prod_{1 <= i < j <= h} (zeta**(2j) - zeta**(2i))`` with zeta of order p-1."""
    P = as_prime(p)
    m = P.p - 1
    acc = ComplexAccumulator()
    for i in range(1, P.h + 1):
        zi = _root_of_unity(2 * i, m)
        for j in range(i + 1, P.h + 1):
            acc.multiply(_root_of_unity(2 * j, m) - zi)
    return acc


def petrov_product(p) -> ComplexAccumulator:
    """Log-space ``prod_{1 <= i < j <= p-1} (zeta**j - zeta**i)``."""
    P = as_prime(p)
    m = P.p - 1
    acc = ComplexAccumulator()
    for i in range(1, m + 1):
        zi = _root_of_unity(i, m)
        for j in range(i + 1, m + 1):
            acc.multiply(_root_of_unity(j, m) - zi)
    return acc


def _check_complex(p, tol: float, accumulate, log_target: float, phase_target: float) -> bool:
    P = as_prime(p)
    if P.p > COMPLEX_MAX_P:
        raise ValueError(f"complex product checks are limited to p <= {COMPLEX_MAX_P}")
    acc = accumulate(P)
    return (
        abs(acc.log_magnitude - log_target) < tol
        and phase_distance(acc.phase, phase_target) < tol
    )


def check_upsilon_complex(p, tol: float = 1e-6) -> bool:
    P = as_prime(p)
    p = P.p
    log_target = (p - 1) / 4 * math.log((p - 1) / 2)
    phase_target = ((p - 3) * (3 * p + 1) % 32) * math.pi / 16
    return _check_complex(P, tol, upsilon_at_zeta, log_target, phase_target)


def check_petrov_complex(p, tol: float = 1e-6) -> bool:
    P = as_prime(p)
    p = P.p
    log_target = (p - 1) / 2 * math.log(p - 1)
    phase_target = ((p - 2) * (3 * p - 1) % 8) * math.pi / 4
    return _check_complex(P, tol, petrov_product, log_target, phase_target)


def special_form_parameter(p: int) -> int | None:
    """``n >= 0`` with ``p = 18 (2n+1)**2 + 1``, or ``None``."""
    p = int(p)
    if p < 19 or (p - 1) % 18:
        return None
    m = math.isqrt((p - 1) // 18)
    if m * m * 18 + 1 != p or m % 2 == 0:
        return None
    return (m - 1) // 2


def check_special_form_product(p, n: int) -> bool:
    """For p = 18(2n+1)**2 + 1: every root's squared-power product equals (6n+3)**h, and (6n+3 / p) = (-1)**(n+1)."""
    P = as_prime(p)
    if n < 0 or P.p != 18 * (2 * n + 1) ** 2 + 1:
        raise ValueError(f"{P.p} is not 18(2n+1)^2 + 1 for n = {n}")
    target = pow(6 * n + 3, P.h, P.p)
    if legendre_euler(6 * n + 3, P) != (-1) ** (n + 1):
        return False
    return all(squared_power_product(g, P) == target for g in primitive_roots(P))
