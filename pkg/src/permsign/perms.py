"""Permutations of {1, ..., n} built from primitive roots, and their signs.

Two independent sign algorithms are provided: cycle counting
(:func:`sign_cycles`) and merge-sort inversion counting
(:func:`sign_inversions`).  :func:`batch_cycle_counts` handles many
permutations at once for the verification scans.
"""
from __future__ import annotations

import math

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .arith import as_prime, is_primitive_root, power_table


class Permutation:
    """A bijection on ``{1, ..., n}``, stored 1-based."""

    __slots__ = ("images",)

    def __init__(self, images):
        arr = np.asarray(images, dtype=np.int64)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("a permutation needs a non-empty 1-d image list")
        n = arr.size
        if arr.min() < 1 or arr.max() > n or np.bincount(arr, minlength=n + 1)[1:].min() != 1:
            raise ValueError("images do not form a bijection on {1..n}")
        arr.flags.writeable = False
        self.images = arr

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(np.arange(1, n + 1))

    @property
    def n(self) -> int:
        return int(self.images.size)

    def __len__(self):
        return self.n

    def __call__(self, b: int) -> int:
        if not 1 <= b <= self.n:
            raise IndexError(b)
        return int(self.images[b - 1])

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return np.array_equal(self.images, other.images)

    def __hash__(self):
        return hash(self.images.tobytes())

    def __repr__(self):
        return f"Permutation({self.images.tolist()})"

    def tolist(self) -> list[int]:
        return self.images.tolist()

    def compose(self, other: "Permutation") -> "Permutation":
        """``self o other``: apply ``other`` first."""
        if other.n != self.n:
            raise ValueError("size mismatch")
        return Permutation(self.images[other.images - 1])

    def inverse(self) -> "Permutation":
        inv = np.empty_like(self.images)
        inv[self.images - 1] = np.arange(1, self.n + 1)
        return Permutation(inv)

    def cycle_type(self) -> list[int]:
        """Sorted cycle lengths (fixed points included)."""
        perm = (self.images - 1).tolist()
        seen = bytearray(len(perm))
        lengths = []
        for start in range(len(perm)):
            if seen[start]:
                continue
            length, j = 0, start
            while not seen[j]:
                seen[j] = 1
                j = perm[j]
                length += 1
            lengths.append(length)
        return sorted(lengths)


def sign_cycles(perm: Permutation) -> int:
    """``(-1)**(n - #cycles)``, one pass with a visited mask."""
    images = (perm.images - 1).tolist()
    seen = bytearray(len(images))
    cycles = 0
    for start in range(len(images)):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = 1
            j = images[j]
    return -1 if (len(images) - cycles) % 2 else 1


def count_inversions(seq) -> int:
    """Inversions of ``seq`` by bottom-up merge sort."""
    a = list(seq)
    n = len(a)
    buf = [0] * n
    inv = 0
    width = 1
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = min(lo + width, n)
            hi = min(lo + 2 * width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if a[i] <= a[j]:
                    buf[k] = a[i]
                    i += 1
                else:
                    buf[k] = a[j]
                    inv += mid - i
                    j += 1
                k += 1
            buf[k:hi] = a[i:mid] if i < mid else a[j:hi]
        a, buf = buf, a
        width *= 2
    return inv


def sign_inversions(perm: Permutation) -> int:
    return -1 if count_inversions(perm.images.tolist()) % 2 else 1


def batch_cycle_counts(table: np.ndarray) -> np.ndarray:
    """Number of cycles of each row of ``table`` (0-based permutations of ``range(n)``).

    All rows are laid out as one functional graph whose strongly connected
    components are exactly the cycles, so the cost is linear in ``table.size``.
    """
    table = np.asarray(table, dtype=np.int64)
    rows, n = table.shape
    if rows == 0:
        return np.zeros(0, dtype=np.int64)
    total = rows * n
    dst = (table + (np.arange(rows, dtype=np.int64) * n)[:, None]).ravel()
    graph = csr_matrix((np.ones(total), dst, np.arange(total + 1)), shape=(total, total))
    k, labels = connected_components(graph, directed=True, connection="strong")
    component_row = np.empty(k, dtype=np.int64)
    component_row[labels] = np.arange(total, dtype=np.int64) // n
    return np.bincount(component_row, minlength=rows)


def batch_signs(table: np.ndarray) -> np.ndarray:
    table = np.asarray(table)
    n = table.shape[1]
    return np.where((n - batch_cycle_counts(table)) % 2, -1, 1)


def _check_root(g: int, p):
    P = as_prime(p)
    if not is_primitive_root(g, P):
        raise ValueError(f"{g} is not a primitive root mod {P.p}")
    return P


def fold_to_half(values: np.ndarray, p: int) -> np.ndarray:
    """Map residues to the half system ``{1..h}`` via ``x -> min(x, p - x)``."""
    return np.where(values > p // 2, p - values, values)


def sigma_table(roots, p: int) -> np.ndarray:
    """0-based images of ``b -> g**b`` on ``{1..p-1}``, one row per root."""
    n = p - 1
    return np.stack([power_table(g, n, p) for g in roots]) - 1 if len(roots) else np.empty((0, n), np.int64)


def tau_table(roots, p: int) -> np.ndarray:
    """0-based images of the folded power map on ``{1..h}``, one row per root."""
    h = (p - 1) // 2
    if not len(roots):
        return np.empty((0, h), np.int64)
    return np.stack([fold_to_half(power_table(g, h, p), p) for g in roots]) - 1


def make_sigma(g: int, p) -> Permutation:
    """``b -> g**b mod p`` on ``{1, ..., p-1}``.

    >>> make_sigma(3, 7)
    Permutation([3, 2, 6, 4, 5, 1])
    """
    P = _check_root(g, p)
    return Permutation(power_table(g, P.p - 1, P.p))


def make_tau(g: int, p) -> Permutation:
    """``b -> +-g**b`` on ``{1, ..., h}``, choosing the representative in ``1..h``.

    >>> make_tau(2, 13)
    Permutation([2, 4, 5, 3, 6, 1])
    """
    P = _check_root(g, p)
    return Permutation(fold_to_half(power_table(g, P.h, P.p), P.p))


def make_eta(a: int, h: int) -> Permutation:
    """Multiplication by ``a`` on ``Z_h = {1, ..., h}`` (class 0 is written ``h``)."""
    if h < 1:
        raise ValueError("h must be positive")
    if math.gcd(a, h) != 1:
        raise ValueError(f"gcd({a}, {h}) != 1")
    return Permutation(eta_table([a], h)[0] + 1)


def eta_table(multipliers, h: int) -> np.ndarray:
    """0-based rows of ``b -> a*b`` on ``Z_h = {1..h}``, one row per multiplier ``a``."""
    a = np.asarray(multipliers, dtype=np.int64)[:, None] % h
    c = a * np.arange(1, h + 1, dtype=np.int64)[None, :] % h
    c[c == 0] = h
    return c - 1


def quadratic_residues(p) -> list[int]:
    P = as_prime(p)
    return sorted({b * b % P.p for b in range(1, P.h + 1)})


def make_nu(g: int, p) -> Permutation:
    """The squared conjugate of tau: ``b**2 -> g**(2b)``, indexed by position in sorted Q_p."""
    P = _check_root(g, p)
    squares = quadratic_residues(P)
    position = {q: i + 1 for i, q in enumerate(squares)}
    g2 = g * g % P.p
    images = [0] * P.h
    for b in range(1, P.h + 1):
        images[position[b * b % P.p] - 1] = position[pow(g2, b, P.p)]
    return Permutation(images)


def conjugation_check(g: int, a: int, p) -> bool:
    """Does ``tau_{g^a}`` equal ``tau_g`` composed with multiplication by ``a`` on ``Z_h``?"""
    P = _check_root(g, p)
    if math.gcd(a, P.p - 1) != 1:
        raise ValueError(f"gcd({a}, {P.p - 1}) != 1")
    lhs = make_tau(pow(g, a, P.p), P)
    rhs = make_tau(g, P).compose(make_eta(a, P.h))
    return lhs == rhs
