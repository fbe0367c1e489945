"""Class numbers of imaginary quadratic fields.

Two independent routes: counting reduced binary quadratic forms, and the
first-moment character sum for prime discriminants.  The form count is the
oracle for every class-number identity checked elsewhere in the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .arith import character_table, is_prime

DEFAULT_MAX_ABS_DISCRIMINANT = 10**7


def is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    if n % 4 == 0:
        return False
    d = 3
    if n % 2 == 0:
        n //= 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        if n % d == 0:
            n //= d
        d += 2
    return True


@dataclass(frozen=True)
class FundamentalDiscriminant:
    """Discriminant of an imaginary quadratic field."""

    D: int

    def __post_init__(self):
        D = self.D
        if D >= 0:
            raise ValueError("fundamental discriminant must be negative")
        if D % 4 == 1:
            ok = is_squarefree(D)
        elif D % 16 in (8, 12):
            ok = is_squarefree(D // 4)
        else:
            ok = False
        if not ok:
            raise ValueError(f"{D} is not a fundamental discriminant")

    def __int__(self) -> int:
        return self.D


@dataclass(frozen=True)
class ClassNumberRecord:
    D: FundamentalDiscriminant
    h: int
    method: str  # "form-count" or "character-sum"


def fundamental_discriminant(m: int) -> FundamentalDiscriminant:
    """Discriminant of Q(sqrt(m)) for negative squarefree m."""
    if m >= 0:
        raise ValueError("expected a negative radicand")
    if not is_squarefree(m):
        raise ValueError(f"{m} is not squarefree")
    return FundamentalDiscriminant(m if m % 4 == 1 else 4 * m)


def _coerce_disc(D) -> FundamentalDiscriminant:
    return D if isinstance(D, FundamentalDiscriminant) else FundamentalDiscriminant(int(D))


@lru_cache(maxsize=4096)
def _count_reduced_forms(D: int) -> int:
    count = 0
    a_max = math.isqrt(-D // 3)
    for a in range(1, a_max + 1):
        # b has the parity of D, |b| <= a
        start = -a + 1
        if (start - D) % 2:
            start += 1
        for b in range(start, a + 1, 2):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and (a == c):
                continue
            count += 1
    return count


def class_number_by_forms(D, max_abs: int = DEFAULT_MAX_ABS_DISCRIMINANT) -> int:
    """h(D) as the number of reduced forms (a, b, c) with b^2 - 4ac = D.

    Reduced means ``-a < b <= a <= c`` with ``b >= 0`` whenever ``a == c``.
    """
    D = _coerce_disc(D)
    if -D.D > max_abs:
        raise ValueError(f"|D| = {-D.D} exceeds the configured bound {max_abs}")
    return _count_reduced_forms(D.D)


def class_number_record(m: int) -> ClassNumberRecord:
    D = fundamental_discriminant(m)
    return ClassNumberRecord(D, class_number_by_forms(D), "form-count")


def h(m: int) -> int:
    """Class number of Q(sqrt(m)) for negative m; the radicand's square factors are dropped."""
    if m >= 0:
        raise ValueError("only imaginary quadratic fields are supported")
    k = -m
    core = 1
    d = 2
    while d * d <= k:
        while k % (d * d) == 0:
            k //= d * d
        if k % d == 0:
            core *= d
            k //= d
        d += 1
    core *= k
    return class_number_by_forms(fundamental_discriminant(-core))


def _check_3_mod_4(p: int) -> None:
    if p <= 3 or p % 4 != 3 or not is_prime(p):
        raise ValueError(f"expected a prime p = 3 mod 4 with p > 3, got {p}")


def class_number_by_character_sum(p: int) -> int:
    """h(-p) = -(1/p) * sum_{r<p} (r/p) r, for primes p = 3 mod 4, p > 3."""
    _check_3_mod_4(p)
    chi = character_table(p)
    total = int(chi @ np.arange(p, dtype=np.int64))
    hp, r = divmod(-total, p)
    if r:
        raise ArithmeticError(f"character sum {total} not divisible by {p}")
    return hp


def berndt_half_sum(p: int) -> int:
    """sum_{a=1}^{(p-1)/2} (a/p) for p = 3 mod 4; equals (2 - (2/p)) h(-p)."""
    _check_3_mod_4(p)
    chi = character_table(p)
    return int(chi[1 : (p - 1) // 2 + 1].sum())

