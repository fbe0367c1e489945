"""Fekete polynomials F_p, their trivial-root quotients f_p, the reduced
polynomials g_p, and the special-value identities they satisfy.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .arith import character_table, is_prime, legendre
from .bernoulli import gen_bernoulli
from .class_numbers import h as class_number
from .polynomials import IntPolynomial, fold_to_reduced, reciprocal_check, sturm_root_count

SPECIAL_POINTS = (-2, -1, 0, 1, 2)


class FeketeDefect(AssertionError):
    """A proven identity failed to hold; indicates a bug, never bad input."""


def _check_p(p: int, minimum: int = 3) -> None:
    if p < minimum or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"expected an odd prime >= {minimum}, got {p}")


@lru_cache(maxsize=None)
def fekete_polynomial(p: int) -> IntPolynomial:
    """F_p(x) = sum_{a=1}^{p-1} (a/p) x^a."""
    _check_p(p)
    return IntPolynomial(int(c) for c in character_table(p))


def trivial_divisor(p: int) -> IntPolynomial:
    """x(1-x) for p = 3 mod 4 and x(1-x)^2(x+1) for p = 1 mod 4."""
    base = IntPolynomial((0, 1, -1))
    if p % 4 == 3:
        return base
    return base * IntPolynomial((1, -1)) * IntPolynomial((1, 1))


def _divide_exact(num: IntPolynomial, den: IntPolynomial) -> IntPolynomial:
    qt, r = num.divrem(den)
    if not r.is_zero():
        raise FeketeDefect(f"{den} does not divide {num}")
    return qt


@dataclass(frozen=True)
class FeketeTriple:
    p: int
    F: IntPolynomial
    f: IntPolynomial
    g: IntPolynomial

    @property
    def h_p(self) -> int:
        return self.g.degree


@lru_cache(maxsize=None)
def build(p: int) -> FeketeTriple:
    """Construct (F_p, f_p, g_p).

    p = 3 and p = 5 give the degenerate f = g = 1.
    """
    _check_p(p)
    F = fekete_polynomial(p)
    f = _divide_exact(F, trivial_divisor(p))
    if not reciprocal_check(f) or f.degree % 2:
        raise FeketeDefect(f"f_{p} is not reciprocal of even degree")
    g = fold_to_reduced(f)
    return FeketeTriple(p, F, f, g)


def f_poly(p: int) -> IntPolynomial:
    return build(p).f


def g_poly(p: int) -> IntPolynomial:
    return build(p).g


def _root_multiplicity(f: IntPolynomial, root: int) -> int:
    div = IntPolynomial((-root, 1))
    m = 0
    while not f.is_zero() and f(root) == 0:
        f = _divide_exact(f, div)
        m += 1
    return m


def trivial_root_multiplicities(p: int) -> tuple[int, int]:
    """Multiplicities of x = 1 and x = -1 as roots of F_p, by repeated division."""
    _check_p(p, 7)
    F = fekete_polynomial(p)
    return _root_multiplicity(F, 1), _root_multiplicity(F, -1)


def unit_interval_root_count(p: int) -> int:
    """Distinct real roots of F_p(x)/x in the open interval (0, 1).

    The root at x = 1 is divided out first so the Sturm count sees
    nonvanishing endpoints.
    """
    _check_p(p, 7)
    F = fekete_polynomial(p)
    h = _divide_exact(F, IntPolynomial((0, 1)))
    for _ in range(trivial_root_multiplicities(p)[0]):
        h = _divide_exact(h, IntPolynomial((-1, 1)))
    return sturm_root_count(h, 0, 1)


def fekete_at_minus_one(p: int) -> int:
    """F_p(-1), checked against ``2 (2 (2/p) - 1) h(-p)`` for p = 3 mod 4."""
    _check_p(p, 7)
    if p % 4 != 3:
        raise ValueError("the class-number formula for F_p(-1) needs p = 3 mod 4")
    value = fekete_polynomial(p)(-1)
    predicted = 2 * (2 * legendre(2, p) - 1) * class_number(-p)
    if value != predicted:
        raise FeketeDefect(f"F_{p}(-1) = {value}, formula gives {predicted}")
    return value


def alternating_half_sum(p: int) -> int:
    chi = character_table(p)
    half = chi[1 : (p - 1) // 2 + 1]
    signs = np.where(np.arange(1, (p - 1) // 2 + 1) % 2 == 0, 1, -1)
    return int(half @ signs)


def alternating_half_sum_sign(p: int) -> int:
    """Sign of ``sum_{a=1}^{(p-1)/2} (a/p) (-1)^a``; always equal to (2/p)."""
    _check_p(p, 7)
    s = alternating_half_sum(p)
    if s == 0:
        raise FeketeDefect(f"alternating half sum vanishes for p = {p}")
    return 1 if s > 0 else -1


def predicted_special_values(p: int) -> dict[int, Fraction]:
    """Closed forms for g_p(u), u in {-2, -1, 0, 1, 2}.

    Class numbers come from the reduced-form count, B_{2,chi_p} from the
    exact character sums.
    """
    _check_p(p, 7)
    l2, l3 = legendre(2, p), legendre(3, p)
    l6 = l2 * l3
    half = Fraction(1, 2)
    if p % 4 == 3:
        hp = class_number(-p)
        return {
            2: Fraction(p * hp),
            -2: Fraction(-(2 * l2 - 1) * hp),
            0: Fraction(-(2 * l2 - 1) * hp),
            1: -half * l6 * (6 - 3 * l2 - 2 * l3 + l6) * hp,
            -1: -half * (legendre(p, 3) + 3) * hp,
        }
    b2 = gen_bernoulli(p, 2)
    h3 = class_number(-3 * p)
    h4 = class_number(-4 * p)
    return {
        2: p * b2 / 4,
        -2: -Fraction(1, 4) * (4 * l2 - 1) * b2,
        0: -half * l2 * h4,
        1: -half * (2 * l2 + 1) * h3,
        -1: -half * l3 * h3,
    }


@dataclass(frozen=True)
class SpecialValues:
    p: int
    values: dict[int, int]
    predicted: dict[int, Fraction]
    match: dict[int, bool] = field(default_factory=dict)

    @property
    def all_match(self) -> bool:
        return all(self.match.values())

    def row(self) -> tuple[int, ...]:
        return tuple(self.values[u] for u in SPECIAL_POINTS)


def special_values(p: int) -> SpecialValues:
    """Evaluate g_p at -2..2 and compare with the closed forms.

    A non-integral prediction counts as a mismatch.
    """
    g = g_poly(p)
    values = {u: g(u) for u in SPECIAL_POINTS}
    predicted = predicted_special_values(p)
    match = {
        u: predicted[u].denominator == 1 and predicted[u] == values[u] for u in SPECIAL_POINTS
    }
    return SpecialValues(p, values, predicted, match)
