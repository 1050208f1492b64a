"""Exact modular arithmetic over odd primes.

Everything here works on plain Python integers.  Residues are ints in
``[0, p)`` and signs are the ints ``+1``/``-1``; :func:`sign_to_residue`
and :func:`residue_to_sign` fix the embedding of signs into ``F_p``
(``+1 -> 1``, ``-1 -> p - 1``) used by every congruence check.
"""
from __future__ import annotations

import math
import random
from dataclasses import InitVar, dataclass, field
from functools import lru_cache

import numpy as np

MAX_PRIME = 1 << 62
TRIAL_DIVISION_LIMIT = 1 << 40
DEFAULT_SEED = 0x5EED

# Deterministic for every n < 3.3e24, which covers the whole 64-bit range.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test, exact for all 64-bit ``n``."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _trial_division(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for q in (2, 3):
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
    q = 5
    while q * q <= n:
        for r in (q, q + 2):
            while n % r == 0:
                out[r] = out.get(r, 0) + 1
                n //= r
        q += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _brent(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int, seed: int = DEFAULT_SEED) -> list[tuple[int, int]]:
    """Ascending prime factorization of ``n >= 1``.

    Trial division below 2**40, Brent's rho with Miller-Rabin certification
    above.  ``seed`` only drives the rho walk; the result never depends on it.

    >>> factorize(162)
    [(2, 1), (3, 4)]
    """
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    if n < TRIAL_DIVISION_LIMIT:
        return sorted(_trial_division(n).items())
    out: dict[int, int] = {}
    for q in range(2, 1000):
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
    rng = random.Random(seed)
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        d = _brent(m, rng)
        stack += [d, m // d]
    return sorted(out.items())


def euler_phi(n: int) -> int:
    out = n
    for q, _ in factorize(n):
        out -= out // q
    return out


@dataclass(frozen=True)
class OddPrime:
    """A certified odd prime together with the factorization of ``p - 1``."""

    p: int
    factors_p_minus_1: tuple[tuple[int, int], ...] = field(init=False, repr=False)
    h: int = field(init=False, repr=False)
    seed: InitVar[int] = DEFAULT_SEED

    def __post_init__(self, seed):
        p = self.p
        if not isinstance(p, (int, np.integer)) or isinstance(p, bool):
            raise TypeError(f"expected an integer, got {p!r}")
        p = int(p)
        if p >= MAX_PRIME:
            raise ValueError(f"{p} exceeds the supported range (< 2**62)")
        if p < 3 or not is_prime(p):
            raise ValueError(f"{p} is not an odd prime")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "factors_p_minus_1", tuple(factorize(p - 1, seed)))
        object.__setattr__(self, "h", (p - 1) // 2)

    def __int__(self):
        return self.p

    __index__ = __int__


@lru_cache(maxsize=4096)
def _cached_prime(p: int) -> OddPrime:
    return OddPrime(p)


def as_prime(p) -> OddPrime:
    """Coerce an int (or an existing :class:`OddPrime`) to an :class:`OddPrime`."""
    if isinstance(p, OddPrime):
        return p
    if isinstance(p, bool) or not isinstance(p, (int, np.integer)):
        raise TypeError(f"expected an integer, got {p!r}")
    return _cached_prime(int(p))


def sign_to_residue(s: int, p) -> int:
    p = int(p)
    if s == 1:
        return 1
    if s == -1:
        return p - 1
    raise ValueError(f"{s!r} is not a sign")


def residue_to_sign(r: int, p) -> int | None:
    """Inverse of :func:`sign_to_residue`; ``None`` if ``r`` is neither ``1`` nor ``-1`` mod p."""
    p = int(p)
    r %= p
    if r == 1:
        return 1
    if r == p - 1:
        return -1
    return None


def mod_pow(base: int, exp: int, p) -> int:
    if exp < 0:
        raise ValueError("negative exponent")
    return pow(base, exp, int(p))


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol ``(a/n)`` for odd ``n >= 1``.

    >>> jacobi(3, 19)
    -1
    """
    if n < 1 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs an odd positive modulus, got {n}")
    a %= n
    t = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                t = -t
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            t = -t
        a %= n
    return t if n == 1 else 0


def kronecker(d: int, n: int) -> int:
    """Kronecker symbol ``(d/n)`` for ``n >= 1``."""
    if n < 1:
        raise ValueError("Kronecker symbol implemented for n >= 1 only")
    t = 1
    while n % 2 == 0:
        n //= 2
        if d % 2 == 0:
            return 0
        if d % 8 in (3, 5):
            t = -t
    return t * jacobi(d, n)


def legendre_euler(a: int, p) -> int:
    p = int(p)
    r = pow(a % p, (p - 1) // 2, p)
    return 0 if r == 0 else (1 if r == 1 else -1)


def legendre_gauss(a: int, p) -> tuple[int, int]:
    """Gauss-lemma count: how many ``b`` in ``1..h`` have ``a*b mod p > h``.

    Returns ``(count, (-1)**count)``.
    """
    P = as_prime(p)
    a %= P.p
    if a == 0:
        raise ValueError("a must be nonzero mod p")
    if P.p < 1 << 31:
        b = np.arange(1, P.h + 1, dtype=np.int64)
        count = int(np.count_nonzero(a * b % P.p > P.h))
    else:
        count = sum(1 for b in range(1, P.h + 1) if a * b % P.p > P.h)
    return count, -1 if count % 2 else 1


def is_primitive_root(g: int, p) -> bool:
    P = as_prime(p)
    g %= P.p
    if g == 0:
        return False
    return all(pow(g, (P.p - 1) // q, P.p) != 1 for q, _ in P.factors_p_minus_1)


def least_primitive_root(p) -> int:
    P = as_prime(p)
    g = 1
    while not is_primitive_root(g, P):
        g += 1
    return g


def power_table(g: int, n: int, p: int) -> np.ndarray:
    """``[g**1, ..., g**n] mod p`` as int64, by repeated doubling.

    Requires ``p < 2**31`` so products stay below 2**62.
    """
    if p >= 1 << 31:
        raise OverflowError("vectorised power tables need p < 2**31")
    out = np.empty(n, dtype=np.int64)
    if n == 0:
        return out
    out[0] = g % p
    k = 1
    while k < n:
        step = min(k, n - k)
        out[k:k + step] = out[:step] * out[k - 1] % p
        k += step
    return out


def primitive_roots(p) -> list[int]:
    """All primitive roots of ``p`` in ascending order.

    >>> primitive_roots(13)
    [2, 6, 7, 11]
    """
    P = as_prime(p)
    g = least_primitive_root(P)
    if P.p < 1 << 31:
        ks = np.arange(1, P.p, dtype=np.int64)
        table = power_table(g, P.p - 1, P.p)
        return np.sort(table[np.gcd(ks, P.p - 1) == 1]).tolist()
    return sorted(pow(g, k, P.p) for k in range(1, P.p) if math.gcd(k, P.p - 1) == 1)


def jacobi_table(n: int) -> np.ndarray:
    """``J[x] = (x/n)`` for ``x = 0..n-1`` and odd ``n >= 1``.

    Built from Euler-criterion residue tables of the prime factors of ``n``.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs an odd positive modulus, got {n}")
    x = np.arange(n, dtype=np.int64)
    out = np.ones(n, dtype=np.int64)
    for q, e in factorize(n):
        chi = np.full(q, -1, dtype=np.int64)
        chi[0] = 0
        chi[np.arange(1, q, dtype=np.int64) ** 2 % q] = 1
        val = chi[x % q]
        out *= val if e % 2 else val * val
    return out


def half_factorial_mod(p) -> int:
    P = as_prime(p)
    r = 1
    for k in range(2, P.h + 1):
        r = r * k % P.p
    return r


def primes_between(lo: int, hi: int) -> list[int]:
    """Odd primes in ``[lo, hi]``."""
    lo = max(lo, 3)
    if hi < lo:
        return []
    if hi <= 1 << 26:
        sieve = np.ones(hi + 1, dtype=bool)
        sieve[:2] = False
        for q in range(2, math.isqrt(hi) + 1):
            if sieve[q]:
                sieve[q * q::q] = False
        return [int(x) for x in np.flatnonzero(sieve[lo:]) + lo]
    start = lo | 1
    return [n for n in range(start, hi + 1, 2) if is_prime(n)]
