"""Bernoulli numbers, generalized Bernoulli numbers of the quadratic
character, and the mod-p criteria built on them.

Convention: ``t / (e^t - 1) = sum B_n t^n / n!``, so ``B_1 = -1/2``.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import character_table, is_prime


class BernoulliCache:
    """Incrementally grown table of exact Bernoulli numbers.

    Uses ``sum_{k=0}^{n} C(n+1, k) B_k = 0``.  Growth is guarded by a lock so
    one cache can be shared between threads.
    """

    def __init__(self):
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    def get(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("Bernoulli index must be >= 0")
        if n < len(self._values):
            return self._values[n]
        with self._lock:
            vals = self._values
            for m in range(len(vals), n + 1):
                if m >= 3 and m % 2:
                    vals.append(Fraction(0))
                    continue
                acc = Fraction(0)
                for k in range(m):
                    if vals[k]:
                        acc += math.comb(m + 1, k) * vals[k]
                vals.append(-acc / (m + 1))
            return vals[n]


_CACHE = BernoulliCache()


def bernoulli(n: int) -> Fraction:
    return _CACHE.get(n)


def bernoulli_akiyama_tanigawa(n: int) -> Fraction:
    """B_n by the Akiyama-Tanigawa transform (gives B_1 = +1/2; sign fixed here).

    Independent of the recurrence in :class:`BernoulliCache`; used as a
    cross-check.
    """
    a = [Fraction(1, m + 1) for m in range(n + 1)]
    for m in range(n + 1):
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    # the transform yields B_n with B_1 = +1/2
    return -a[0] if n == 1 else a[0]


def _check_odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise ValueError(f"expected an odd prime, got {p}")


def moment_sum(p: int, r: int) -> int:
    """Exact ``sum_{a=1}^{p-1} (a/p) a^r``."""
    _check_odd_prime(p)
    if r < 0:
        raise ValueError("moment order must be >= 0")
    chi = character_table(p)
    return sum(int(chi[a]) * a**r for a in range(1, p))


def _moments_1_2(p: int) -> tuple[int, int]:
    chi = character_table(p)
    a = np.arange(p, dtype=object)
    c = chi.astype(object)
    return int((c * a).sum()), int((c * a * a).sum())


@dataclass(frozen=True)
class GenBernoulliValue:
    p: int
    n: int
    value: Fraction


def gen_bernoulli(p: int, n: int) -> Fraction:
    """B_{n, chi_p} for n in {1, 2}.

    ``B_1 = (1/p) sum chi(a) a`` and ``B_2 = (1/p) sum chi(a) a^2 - sum chi(a) a``.
    """
    _check_odd_prime(p)
    if n not in (1, 2):
        raise ValueError("only n = 1 and n = 2 are supported")
    s1, s2 = _moments_1_2(p)
    if n == 1:
        return Fraction(s1, p)
    return Fraction(s2, p) - s1


def gen_bernoulli_value(p: int, n: int) -> GenBernoulliValue:
    return GenBernoulliValue(p, n, gen_bernoulli(p, n))


def _check_1_mod_4(p: int) -> None:
    if p <= 5 or p % 4 != 1 or not is_prime(p):
        raise ValueError(f"expected a prime p = 1 mod 4 with p > 5, got {p}")


def bernoulli_quotient_mod_p(p: int, two_k: int) -> int:
    """``B_{2k} / (2k) mod p`` from the half-range power sum.

    Uses ``sum_{a=1}^{(p-1)/2} (p - 2a)^{2k-1} = (2^{2k} - 1) B_{2k}/(2k) (mod p)``,
    valid for ``2k`` not congruent to 2 mod ``p - 1``.
    """
    _check_odd_prime(p)
    if two_k < 2 or two_k % 2:
        raise ValueError("index must be a positive even integer")
    if (two_k - 2) % (p - 1) == 0:
        raise ValueError(f"index {two_k} is congruent to 2 mod {p - 1}")
    cofactor = (pow(2, two_k, p) - 1) % p
    if cofactor == 0:
        raise ArithmeticError(f"2^{two_k} - 1 is not invertible mod {p}")
    e = two_k - 1
    s = 0
    for a in range(1, (p - 1) // 2 + 1):
        s += pow(p - 2 * a, e, p)
    return s * pow(cofactor, -1, p) % p


def bernoulli_mod_p(p: int, two_k: int) -> int:
    """``B_{2k} mod p`` via :func:`bernoulli_quotient_mod_p`."""
    return bernoulli_quotient_mod_p(p, two_k) * two_k % p


def fraction_mod_p(x: Fraction, p: int) -> int:
    if x.denominator % p == 0:
        raise ArithmeticError(f"denominator of {x} is divisible by {p}")
    return x.numerator * pow(x.denominator, -1, p) % p


def half_first_moment(p: int) -> int:
    """``sum_{a=1}^{(p-1)/2} (a/p) a``."""
    chi = character_table(p)
    h = (p - 1) // 2
    return int(chi[1 : h + 1] @ np.arange(1, h + 1, dtype=np.int64))


def irregular_index_check(p: int) -> bool:
    """True iff p divides B_{(p+3)/2}, for primes p = 1 mod 4 with p > 5.

    Evaluated through the equivalent criterion ``p | sum_{a<=(p-1)/2} (a/p) a``,
    an O(p) computation.
    """
    _check_1_mod_4(p)
    return half_first_moment(p) % p == 0


@dataclass(frozen=True)
class CongruenceCheck:
    p: int
    lhs: int | None  # B_{2,chi_p} / 2 mod p
    rhs: int | None  # 2 B_{(p+3)/2} / (p+3) mod p
    holds: bool
    note: str = ""


def kubota_leopoldt_check(p: int) -> CongruenceCheck:
    """Compare ``B_{2,chi_p}/2`` with ``2 B_{(p+3)/2}/(p+3)`` modulo p."""
    _check_1_mod_4(p)
    try:
        lhs = fraction_mod_p(gen_bernoulli(p, 2) / 2, p)
        rhs = bernoulli_quotient_mod_p(p, (p + 3) // 2)
    except ArithmeticError as exc:
        return CongruenceCheck(p, None, None, False, str(exc))
    return CongruenceCheck(p, lhs, rhs, lhs == rhs)


def kubota_leopoldt_congruence_check(p: int) -> bool:
    return kubota_leopoldt_check(p).holds
