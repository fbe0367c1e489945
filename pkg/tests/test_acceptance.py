"""Acceptance checks, each timed against its runtime bound.

A one-line pass/fail summary per criterion is printed at the end of the run.
"""

import random
from fractions import Fraction

import numpy as np
import pytest

from conftest import load_table
from fekete.arith import legendre, primes_up_to, valuation
from fekete.bernoulli import irregular_index_check, kubota_leopoldt_congruence_check
from fekete.construct import alternating_half_sum, build, special_values, unit_interval_root_count
from fekete.ff_factor import factor, is_irreducible_mod, pattern
from fekete.galois import (
    check_quadruple,
    check_triple,
    discriminant_relation_check,
    discriminants,
    find_smallest_triple,
    irreducibility_certify,
    s_value,
)
from fekete.modular import discriminant_valuation_report, modp_shape
from fekete.polynomials import (
    IntPolynomial,
    ModPolynomial,
    dickson,
    reduce_mod,
    resultant,
    sturm_root_count,
    sylvester_resultant,
)

pytestmark = pytest.mark.acceptance


def primes_between(lo, hi):
    return [p for p in primes_up_to(hi) if p >= lo]


# ascending coefficients
KNOWN_F = {
    7: [1, 2, 1, 2, 1],
    11: [1, 0, 1, 2, 3, 2, 1, 0, 1],
    13: [1, 0, 2, 2, 3, 2, 2, 0, 1],
    17: [1, 2, 2, 4, 3, 4, 2, 4, 3, 4, 2, 2, 1],
    19: [1, 0, -1, 0, 1, 2, 3, 2, 3, 2, 3, 2, 1, 0, -1, 0, 1],
    23: [1, 2, 3, 4, 3, 4, 3, 4, 5, 4, 3, 4, 5, 4, 3, 4, 3, 4, 3, 2, 1],
}
KNOWN_G = {
    7: [-1, 2, 1],
    11: [3, 2, -3, 0, 1],
    13: [1, 2, -2, 0, 1],
    17: [-2, 2, 4, -6, -4, 2, 1],
    19: [3, -4, -26, 2, 27, 0, -9, 0, 1],
    23: [-3, 2, -3, -20, -5, 30, 14, -14, -7, 2, 1],
}
# g_p(u) for u = -2, -1, 0, 1, 2
KNOWN_VALUES = {
    7: (-1, -2, -1, 2, 7),
    11: (3, -1, 3, 3, 11),
    13: (5, -2, 1, 2, 13),
    17: (-6, 1, -2, -3, 34),
    19: (3, -2, 3, -6, 19),
    23: (-3, -3, -3, -3, 69),
}
# monic factors, ascending coefficients
WORKED_FACTORS = {
    (11, 5): [[3, 2, 2, 0, 1]],
    (11, 7): [[4, 1], [6, 6, 3, 1]],
    (11, 53): [[26, 1], [30, 1], [21, 50, 1]],
    (13, 3): [[1, 2, 1, 0, 1]],
    (13, 5): [[2, 1], [3, 2, 3, 1]],
    (13, 61): [[51, 1], [54, 1], [34, 17, 1]],
}


def test_c01_explicit_polynomials(criterion):
    with criterion(1, "explicit f_p and g_p", 1.0):
        for p in KNOWN_F:
            t = build(p)
            assert list(t.f.coeffs) == KNOWN_F[p], p
            assert list(t.g.coeffs) == KNOWN_G[p], p


def test_c02_special_values(criterion):
    with criterion(2, "special values and class-number identities", 120.0):
        for p, row in KNOWN_VALUES.items():
            assert special_values(p).row() == row, p
        bad = [p for p in primes_between(7, 2000) if not special_values(p).all_match]
        assert bad == []


def test_c03_galois_certificates(criterion):
    with criterion(3, "Galois certificates", 300.0):
        for p, *qs in load_table("triples"):
            assert 11 <= p <= 499
            assert check_triple(p, *qs).validated, (p, qs)
        for p, *qs in load_table("quadruples"):
            assert 11 <= p <= 199
            assert check_quadruple(p, *qs).validated, (p, qs)
        known = {row[0]: tuple(row[1:]) for row in load_table("triples")}
        for p in (11, 13, 17, 19, 23, 29, 31, 37, 41, 43):
            found = find_smallest_triple(p, q_bound=10**6)
            assert found.validated
            assert found.primes == known[p], (p, found.primes, known[p])


def test_c04_worked_factorizations(criterion):
    with criterion(4, "worked factorization examples", 1.0):
        for (p, q), expected in WORKED_FACTORS.items():
            fl = factor(reduce_mod(build(p).g, q))
            got = sorted(list(g.coeffs) for g, m in fl)
            assert got == sorted(expected), (p, q, got)
            assert all(m == 1 for _, m in fl)


def test_c05_s_p_and_discriminants(criterion):
    with criterion(5, "s_p and discriminants", 180.0):
        for p in primes_between(7, 2000):
            assert not s_value(p).is_square, p
        for p in primes_between(7, 100):
            assert discriminant_relation_check(p), p
        for p in primes_between(7, 150):
            assert discriminant_valuation_report(p).both_bounds_hold, p
        assert valuation(discriminants(19)[0], 2) == 18


def test_c06_modp_shape(criterion):
    with criterion(6, "mod-p (x-1) shape", 60.0):
        bad = [p for p in primes_between(7, 500) if not modp_shape(p).matches]
        assert bad == []


def test_c07_irregularity(criterion):
    with criterion(7, "irregularity scan", 120.0, "scan"):
        hits = [p for p in primes_between(7, 19999) if p % 4 == 1 and irregular_index_check(p)]
        assert hits == []
        admissible = [p for p in primes_between(7, 500) if p % 4 == 1]
        assert all(kubota_leopoldt_congruence_check(p) for p in admissible)
    with criterion(7, "irregularity scan", 1.0, "89209"):
        assert irregular_index_check(89209)


def test_c08_half_sum_sign(criterion):
    with criterion(8, "alternating half-sum sign", 30.0):
        bad = [p for p in primes_between(7, 5000) if legendre(2, p) * alternating_half_sum(p) <= 0]
        assert bad == []


def test_c09_unit_interval_roots(criterion):
    with criterion(9, "real roots of F_p(x)/x in (0,1)", 10.0):
        count = unit_interval_root_count(67)
        assert count >= 1
        assert count == 2  # regression value
        assert [unit_interval_root_count(p) for p in (7, 11, 13)] == [0, 0, 0]


def test_c10_irreducibility(criterion):
    with criterion(10, "irreducibility for 7 <= p <= 1000", 120.0):
        for p in primes_between(7, 1000):
            res = irreducibility_certify(p)
            assert res.status == "irreducible", p
            assert res.f_irreducible, p


# ---------------------------------------------------------------- criterion 11


def _random_mod_poly(rng, q):
    n = rng.randint(1, 8)
    f = ModPolynomial([rng.randrange(q) for _ in range(n)] + [rng.randrange(1, q)], q)
    if rng.random() < 0.4:
        g = ModPolynomial([rng.randrange(q) for _ in range(rng.randint(1, 3))] + [1], q)
        f = f * g ** rng.randint(2, 3)
    return f


def _factor_refactor(rng):
    q = rng.choice([2, 3, 5, 7, 11, 13, 31, 101, 257, 7919, 65537])
    f = _random_mod_poly(rng, q)
    fl = factor(f, seed=rng.randrange(1000))
    assert fl.expand() == f
    assert fl.pattern() == pattern(f)
    assert fl.pattern().degree == f.degree
    polys = [g for g, _ in fl]
    assert len(set(polys)) == len(polys)
    assert all(g.is_monic() and is_irreducible_mod(g) for g in polys)


def _random_int_poly(rng, max_deg, bound=9):
    n = rng.randint(1, max_deg)
    return IntPolynomial([rng.randint(-bound, bound) for _ in range(n)] + [rng.choice([-1, 1]) * rng.randint(1, bound)])


def _constructed_real_roots(rng):
    """Polynomial with known distinct rational roots, optionally times a
    positive definite quadratic and a repeated root."""
    roots, k = set(), rng.randint(1, 4)
    while len(roots) < k:
        roots.add(Fraction(rng.randint(-15, 15), rng.randint(1, 5)))
    f = IntPolynomial((1,))
    for r in roots:
        f = f * IntPolynomial((-r.numerator, r.denominator))
    if rng.random() < 0.5:
        b = rng.randint(-3, 3)
        f = f * IntPolynomial((b * b + rng.randint(1, 5), 2 * b, 1))
    squarefree = rng.random() >= 0.3
    if not squarefree:
        r = rng.choice(sorted(roots))
        f = f * IntPolynomial((-r.numerator, r.denominator))
    return f, roots, squarefree


def _bisection_count(f, lo, hi, depth=10):
    """Sign changes of a squarefree f on a grid refined by repeated halving;
    exact zeros at interior grid points count as roots."""
    n = 1 << depth
    step = (hi - lo) / n
    count, prev = 0, f.eval_sign(lo)
    for k in range(1, n + 1):
        s = f.eval_sign(lo + k * step)
        if s == 0:
            count, prev = count + 1, None
            continue
        if prev is not None and s != prev:
            count += 1
        prev = s
    return count


def _sturm_vs_oracles(rng):
    f, roots, squarefree = _constructed_real_roots(rng)
    lo = Fraction(rng.randint(-40, 0), 7)
    hi = lo + Fraction(rng.randint(1, 60), 7)
    if lo in roots or hi in roots:
        return
    expected = sum(1 for r in roots if lo < r < hi)
    assert sturm_root_count(f, lo, hi) == expected, (f, lo, hi)
    if squarefree and f.degree <= 6:
        assert _bisection_count(f, lo, hi) == expected, (f, lo, hi)


def _sturm_vs_numeric(rng):
    f = _random_int_poly(rng, 6)
    if f.degree < 1 or f.eval_sign(-4) == 0 or f.eval_sign(4) == 0:
        return
    r = np.roots([float(c) for c in reversed(f.coeffs)])
    real = r[np.abs(r.imag) < 1e-9].real
    if np.any((np.abs(r.imag) >= 1e-9) & (np.abs(r.imag) < 1e-3)) or np.any(np.abs(np.abs(real) - 4) < 1e-6):
        return
    expected = len({round(x, 6) for x in real if -4 < x < 4})
    assert sturm_root_count(f, -4, 4) == expected, f


def test_c11_property_suites(criterion):
    rng = random.Random(20240611)
    with criterion(11, "property suites", 60.0):
        for _ in range(1000):
            _factor_refactor(rng)
        for _ in range(300):
            f, g, h = (_random_int_poly(rng, 3) for _ in range(3))
            assert resultant(f, g) == sylvester_resultant(f, g)
            assert resultant(f, g * h) == resultant(f, g) * resultant(f, h)
            a, b = _random_int_poly(rng, 6), _random_int_poly(rng, 6)
            assert resultant(a, b) == sylvester_resultant(a, b)
        for _ in range(150):
            _sturm_vs_oracles(rng)
            _sturm_vs_numeric(rng)
        for t in (Fraction(2), Fraction(3, 2), Fraction(-5)):
            for n in range(41):
                assert dickson(n)(t + 1 / t) == t**n + t ** (-n), (n, t)
