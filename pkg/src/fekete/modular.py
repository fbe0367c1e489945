"""Shape of F_p and f_p modulo p, and the p-adic and 2-adic size of disc(f_p)."""

from __future__ import annotations

from dataclasses import dataclass

from .arith import valuation
from .construct import _check_p, build, fekete_polynomial, trivial_root_multiplicities
from .polynomials import IntPolynomial, ModPolynomial, discriminant, reduce_mod

__all__ = [
    "BudgetExceeded",
    "DEFAULT_DISC_BUDGET",
    "DiscriminantValuationReport",
    "ModPShape",
    "discriminant_valuation_report",
    "modp_shape",
    "one_multiplicity_mod_p",
    "valuation",
]

DEFAULT_DISC_BUDGET = 150


class BudgetExceeded(ValueError):
    """An exact discriminant was requested above the configured degree budget."""


def one_multiplicity_mod_p(f: IntPolynomial, p: int) -> tuple[int, int]:
    """Multiplicity of x = 1 as a root of f mod p, by repeated exact division
    by (x - 1) in F_p[x], and the value of the cofactor at 1."""
    cur = reduce_mod(f, p)
    if cur.is_zero():
        raise ValueError(f"polynomial vanishes mod {p}")
    div = ModPolynomial((-1, 1), p)
    m = 0
    while cur(1) == 0:
        cur, r = cur.divrem(div)
        if not r.is_zero():
            raise AssertionError("x - 1 failed to divide a polynomial vanishing at 1")
        m += 1
    return m, cur(1)


@dataclass(frozen=True)
class ModPShape:
    p: int
    multiplicity_F: int
    multiplicity_f: int
    cofactor_F_at_1: int
    cofactor_f_at_1: int
    r_p: int

    @property
    def cofactor_nonvanishing_at_1(self) -> bool:
        return self.cofactor_F_at_1 != 0 and self.cofactor_f_at_1 != 0

    @property
    def predicted(self) -> tuple[int, int]:
        half = (self.p - 1) // 2
        return half, half - self.r_p

    @property
    def matches(self) -> bool:
        return (self.multiplicity_F, self.multiplicity_f) == self.predicted and self.cofactor_nonvanishing_at_1


def modp_shape(p: int) -> ModPShape:
    """(x - 1)-adic shape of F_p and f_p modulo p; r_p is the multiplicity of
    x = 1 as a root of F_p over the integers."""
    _check_p(p, 7)
    mF, cF = one_multiplicity_mod_p(fekete_polynomial(p), p)
    mf, cf = one_multiplicity_mod_p(build(p).f, p)
    r_p = trivial_root_multiplicities(p)[0]
    return ModPShape(p, mF, mf, cF, cf, r_p)


@dataclass(frozen=True)
class DiscriminantValuationReport:
    p: int
    v_p: int
    bound_p: int
    v_2: int
    bound_2: int
    p_divides: bool
    gcd_degree_mod_p: int

    @property
    def both_bounds_hold(self) -> bool:
        return self.v_p >= self.bound_p and self.v_2 >= self.bound_2

    def as_tuple(self) -> tuple[int, int, int, int, bool]:
        return self.v_p, self.bound_p, self.v_2, self.bound_2, self.both_bounds_hold


def discriminant_valuation_report(p: int, budget: int = DEFAULT_DISC_BUDGET) -> DiscriminantValuationReport:
    """v_p and v_2 of disc(f_p) against ``(p-3)/2 - r_p`` and ``deg f_p``.

    The exact discriminant is refused above ``budget``.  The degree of
    gcd(f_p, f_p') mod p rides along as corroborating data.
    """
    _check_p(p, 7)
    if p > budget:
        raise BudgetExceeded(f"exact disc(f_{p}) is above the budget p <= {budget}")
    f = build(p).f
    disc = discriminant(f)
    if disc == 0:
        raise AssertionError(f"f_{p} has a repeated factor over the integers")
    r_p = trivial_root_multiplicities(p)[0]
    fp = reduce_mod(f, p)
    return DiscriminantValuationReport(
        p=p,
        v_p=valuation(disc, p),
        bound_p=(p - 3) // 2 - r_p,
        v_2=valuation(disc, 2),
        bound_2=f.degree,
        p_divides=disc % p == 0,
        gcd_degree_mod_p=fp.gcd(fp.derivative()).degree,
    )
