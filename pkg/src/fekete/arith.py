"""Exact scalar arithmetic and elementary number theory.

Integers are plain Python ``int`` (arbitrary precision, canonical zero) and
rationals are :class:`fractions.Fraction` (always reduced, positive
denominator).  Nothing in the package uses floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator

import numpy as np

__all__ = [
    "Fraction",
    "PrimeIterator",
    "character_table",
    "is_prime",
    "jacobi",
    "legendre",
    "mod_pow",
    "primes_up_to",
    "squarefree_part",
    "valuation",
]

# Deterministic Miller-Rabin witness set, valid for every n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)
MAX_PRIME_INPUT = 1 << 64


def mod_pow(a: int, e: int, m: int) -> int:
    """Return ``a**e mod m`` in ``[0, m)``."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if e < 0:
        raise ValueError("exponent must be non-negative")
    return pow(a, e, m)


def is_prime(n: int) -> bool:
    """Deterministic primality test for ``0 <= n < 2**64``.

    Larger inputs are outside the operating range and raise ``ValueError``
    rather than returning a probabilistic answer.
    """
    if n < 0:
        raise ValueError("is_prime expects n >= 0")
    if n >= MAX_PRIME_INPUT:
        raise ValueError("is_prime is only defined for n < 2**64")
    if n < 2:
        return False
    for sp in _SMALL_PRIMES:
        if n % sp == 0:
            return n == sp
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


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n, by reciprocity descent."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("jacobi expects an odd positive modulus")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p.

    Computed by reciprocity descent; Euler's criterion is the independent
    cross-check used in the test suite.
    """
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"legendre expects an odd prime, got {p}")
    return jacobi(a, p)


def character_table(p: int) -> np.ndarray:
    """Array ``chi`` of length p with ``chi[a] = (a/p)``.

    Built by squaring the units, so it is independent of :func:`legendre`.
    Used wherever a sum runs over all residues.
    """
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"character_table expects an odd prime, got {p}")
    chi = np.full(p, -1, dtype=np.int64)
    a = np.arange(1, (p - 1) // 2 + 1, dtype=np.int64)
    chi[(a * a) % p] = 1
    chi[0] = 0
    return chi


def primes_up_to(n: int) -> list[int]:
    """All primes ``<= n`` by the sieve of Eratosthenes."""
    if n < 2:
        return []
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    return [int(x) for x in np.flatnonzero(sieve)]


class PrimeIterator:
    """Ascending stream of primes, produced by a segmented sieve.

    >>> list(zip(range(5), PrimeIterator()))[-1]
    (4, 11)
    """

    def __init__(self, start: int = 2, stop: int | None = None, segment: int = 1 << 15):
        self.start = max(start, 2)
        self.stop = stop
        self.segment = segment

    def __iter__(self) -> Iterator[int]:
        lo = self.start
        base: list[int] = []
        base_limit = 1
        while self.stop is None or lo <= self.stop:
            hi = lo + self.segment
            if self.stop is not None:
                hi = min(hi, self.stop + 1)
            need = math.isqrt(hi) + 1
            if need > base_limit:
                base_limit = max(need, 2 * base_limit)
                base = primes_up_to(base_limit)
            mark = np.ones(hi - lo, dtype=bool)
            for sp in base:
                if sp * sp >= hi:
                    break
                first = max(sp * sp, -(-lo // sp) * sp)
                mark[first - lo :: sp] = False
            for off in np.flatnonzero(mark):
                yield lo + int(off)
            lo = hi


def valuation(n: int, q: int) -> int:
    """Exponent of the prime q in the nonzero integer n."""
    if n == 0:
        raise ValueError("valuation of zero is undefined")
    if q < 2:
        raise ValueError("valuation base must be >= 2")
    n = abs(n)
    v = 0
    while n % q == 0:
        n //= q
        v += 1
    return v


def squarefree_part(n: int, trial_bound: int = 10_000) -> int:
    """Signed squarefree part of a nonzero integer.

    Primes up to ``trial_bound`` are removed by trial division; a leftover
    cofactor that is a perfect square is dropped, otherwise it is kept whole.
    The answer is exact whenever the leftover has no repeated prime factor
    above the bound, which covers every value this package feeds in.
    """
    if n == 0:
        raise ValueError("squarefree part of zero is undefined")
    sign = -1 if n < 0 else 1
    m = abs(n)
    part = 1
    for sp in primes_up_to(min(trial_bound, math.isqrt(m) + 1)):
        if sp * sp > m:
            break
        e = 0
        while m % sp == 0:
            m //= sp
            e += 1
        if e % 2:
            part *= sp
    r = math.isqrt(m)
    if r * r != m:
        part *= m
    return sign * part
