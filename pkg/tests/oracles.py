"""Deliberately naive reference computations used as independent oracles."""
import cmath
import math


def sieve(n):
    flags = [True] * (n + 1)
    flags[0:2] = [False, False]
    for i in range(2, math.isqrt(n) + 1):
        if flags[i]:
            flags[i * i::i] = [False] * len(flags[i * i::i])
    return [i for i, f in enumerate(flags) if f]


def multiplicative_order(g, p):
    x, k = g % p, 1
    while x != 1:
        x = x * g % p
        k += 1
    return k


def brute_primitive_roots(p):
    return [g for g in range(1, p) if multiplicative_order(g, p) == p - 1]


def brute_legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if a in {x * x % p for x in range(1, p)} else -1


def brute_jacobi(a, n):
    """Product of brute Legendre symbols over the prime factors of n."""
    out, m, q = 1, n, 3
    while m > 1:
        while m % q == 0:
            out *= brute_legendre(a, q)
            m //= q
        q += 2
    return out


def brute_inversions(seq):
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])


def brute_sign(seq):
    return -1 if brute_inversions(seq) % 2 else 1


def brute_reduced_forms(D):
    """Triple loop over (a, b, c); no vectorisation, no shortcuts beyond the bound on a."""
    out = []
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a, a + 1):
            for c in range(a, (b * b - D) // (4 * a) + 1):
                if b * b - 4 * a * c != D:
                    continue
                if (abs(b) == a or a == c) and b < 0:
                    continue
                if math.gcd(math.gcd(a, b), c) == 1:
                    out.append((a, b, c))
        a += 1
    return out


def direct_mod_product(values, p):
    r = 1
    for v in values:
        r = r * v % p
    return r


def direct_complex_product(factors):
    z = 1 + 0j
    for f in factors:
        z *= f
    return z


def zeta(k, m):
    return cmath.exp(2j * math.pi * k / m)
