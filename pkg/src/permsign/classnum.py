"""Class numbers of imaginary quadratic discriminants.

Primary route: enumerate primitive reduced binary quadratic forms.
Cross-check: the Dirichlet class number formula for fundamental ``D < -4``,
with the Kronecker character evaluated by a vectorised Jacobi algorithm.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arith import as_prime, factorize


@dataclass(frozen=True, order=True)
class QuadraticForm:
    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if a <= 0 or not abs(b) <= a <= c:
            return False
        return b >= 0 if (abs(b) == a or a == c) else True

    def is_primitive(self) -> bool:
        return math.gcd(self.a, self.b, self.c) == 1

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def __str__(self):
        return f"({self.a},{self.b},{self.c})"


def check_discriminant(D: int) -> int:
    D = int(D)
    if D >= 0 or D % 4 not in (0, 1):
        raise ValueError(f"{D} is not a negative discriminant (need D < 0, D = 0 or 1 mod 4)")
    return D


def is_fundamental(D: int) -> bool:
    if D % 4 == 1:
        return _squarefree(abs(D))
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and _squarefree(abs(m))
    return False


def _squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factorize(n))


def reduced_forms(D: int) -> list[QuadraticForm]:
    """Primitive reduced forms of discriminant ``D``, sorted by ``(a, b)``.

    >>> reduced_forms(-52)
    [QuadraticForm(a=1, b=0, c=13), QuadraticForm(a=2, b=2, c=7)]
    """
    D = check_discriminant(D)
    amax = math.isqrt(-D // 3)
    a = np.arange(1, amax + 1, dtype=np.int64)[:, None]
    b = np.arange(-amax, amax + 1, dtype=np.int64)[None, :]
    a, b = np.broadcast_arrays(a, b)
    num = b * b - D
    keep = (np.abs(b) <= a) & ((b - D) % 2 == 0) & (num % (4 * a) == 0)
    a, b, num = a[keep], b[keep], num[keep]
    c = num // (4 * a)
    keep = c >= a
    keep &= ~(((np.abs(b) == a) | (a == c)) & (b < 0))
    keep &= np.gcd(np.gcd(a, b), c) == 1
    return [QuadraticForm(int(x), int(y), int(z)) for x, y, z in zip(a[keep], b[keep], c[keep])]


def class_number(D: int) -> int:
    return len(reduced_forms(D))


def jacobi_vec(a: np.ndarray, n: np.ndarray) -> np.ndarray:
    """Elementwise Jacobi symbol for arrays of numerators and odd positive moduli."""
    a = np.array(a, dtype=np.int64, copy=True)
    n = np.array(n, dtype=np.int64, copy=True)
    a, n = np.broadcast_arrays(a, n)
    a, n = a.copy(), n.copy()
    if np.any((n < 1) | (n % 2 == 0)):
        raise ValueError("Jacobi moduli must be odd and positive")
    a %= n
    t = np.ones(a.shape, dtype=np.int64)
    active = a != 0
    while active.any():
        while True:
            even = active & (a % 2 == 0)
            if not even.any():
                break
            a[even] //= 2
            flip = even & ((n % 8 == 3) | (n % 8 == 5))
            t[flip] = -t[flip]
        a_act, n_act = a[active], n[active]
        flip = (a_act % 4 == 3) & (n_act % 4 == 3)
        t_act = t[active]
        t_act[flip] = -t_act[flip]
        t[active] = t_act
        a[active], n[active] = n_act % a_act, a_act
        active = a != 0
    return np.where(n == 1, t, 0)


def kronecker_vec(d: int, ns: np.ndarray) -> np.ndarray:
    """Kronecker symbol ``(d/n)`` for every positive ``n`` in ``ns``."""
    ns = np.asarray(ns, dtype=np.int64)
    if np.any(ns < 1):
        raise ValueError("Kronecker symbol implemented for n >= 1 only")
    twos = np.zeros(ns.shape, dtype=np.int64)
    odd = ns.copy()
    while True:
        even = odd % 2 == 0
        if not even.any():
            break
        odd[even] //= 2
        twos[even] += 1
    if d % 2 == 0:
        two_part = np.where(twos > 0, 0, 1)
    else:
        chi2 = -1 if d % 8 in (3, 5) else 1
        two_part = np.where(twos % 2 == 1, chi2, 1)
    return two_part * jacobi_vec(np.full(ns.shape, d, dtype=np.int64), odd)


def class_number_dirichlet(D: int) -> int:
    """``|sum chi_D(a) * a| / |D|`` for fundamental ``D < -4``; exact division is enforced."""
    D = check_discriminant(D)
    if D >= -4 or not is_fundamental(D):
        raise ValueError(f"{D} is not a fundamental discriminant below -4")
    a = np.arange(1, -D, dtype=np.int64)
    total = int(np.dot(kronecker_vec(D, a), a))
    q, r = divmod(abs(total), -D)
    if r:
        raise ArithmeticError(f"character sum {total} not divisible by {-D}")
    return q


def discriminant_for_prime(p) -> int:
    """Fundamental discriminant of Q(sqrt(-p)): ``-4p`` if p = 1 mod 4 else ``-p``."""
    P = as_prime(p)
    return -4 * P.p if P.p % 4 == 1 else -P.p


def class_number_for_prime(p) -> tuple[int, int]:
    D = discriminant_for_prime(p)
    return D, class_number(D)
