from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from fekete.arith import primes_up_to
from fekete.construct import build, fekete_polynomial
from fekete.polynomials import (
    FactorizationPattern,
    IntPolynomial,
    ModPolynomial,
    dickson,
    discriminant,
    fold_by_dickson_sum,
    fold_to_reduced,
    gcd,
    reciprocal_check,
    reduce_mod,
    resultant,
    sturm_root_count,
    sylvester_resultant,
    unfold,
)

P = IntPolynomial
coeffs = st.lists(st.integers(-20, 20), min_size=1, max_size=7)
nonconstant = coeffs.map(P).filter(lambda f: f.degree >= 1)


def monic_of_degree(max_deg):
    return st.lists(st.integers(-9, 9), min_size=1, max_size=max_deg).map(lambda c: P(c + [1]))


def test_divrem_examples():
    assert P((-1, 0, 1)).divrem(P((-1, 1))) == (P((1, 1)), P())
    f7 = build(7).f
    qt, r = fekete_polynomial(7).divrem(P((0, 1, -1)))
    assert qt == f7 and r.is_zero()
    assert f7 * P((0, 1, -1)) == fekete_polynomial(7)


def test_divrem_by_zero():
    with pytest.raises(ZeroDivisionError):
        P((1, 1)).divrem(P())


@given(coeffs.map(P), coeffs.map(P), coeffs.map(P))
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    assert a - a == P()


@given(coeffs.map(P), monic_of_degree(5))
def test_divrem_monic(a, b):
    qt, r = a.divrem(b)
    assert qt * b + r == a
    assert r.is_zero() or r.degree < b.degree


def test_text_round_trip():
    assert P.from_text("-1 2 1") == build(7).g
    assert build(7).g.to_text() == "-1 2 1"
    assert P().to_text() == "0"


@pytest.mark.parametrize("n,expected", [(0, [2]), (1, [0, 1]), (2, [-2, 0, 1]), (5, [0, 5, 0, -5, 0, 1])])
def test_dickson_examples(n, expected):
    assert list(dickson(n).coeffs) == expected


def test_dickson_identity():
    for t in (Fraction(2), Fraction(3, 2), Fraction(-5)):
        for n in range(41):
            assert dickson(n)(t + 1 / t) == t**n + t ** (-n)


def test_resultant_examples():
    # Sylvester convention: Res(x - a, x - b) = a - b
    assert resultant(P((-2, 1)), P((-5, 1))) == -3
    assert sylvester_resultant(P((-2, 1)), P((-5, 1))) == -3
    assert resultant(P((1, 0, 1)), P((-1, 1))) == 2
    f = P((3, -1, 0, 2))
    assert resultant(f, f) == 0


@given(nonconstant, nonconstant)
def test_resultant_matches_sylvester(f, g):
    assert resultant(f, g) == sylvester_resultant(f, g)


@given(nonconstant, nonconstant, nonconstant)
@settings(max_examples=50)
def test_resultant_multiplicative(f, g, h):
    assert resultant(f, g * h) == resultant(f, g) * resultant(f, h)


def test_resultant_zero_rejected():
    with pytest.raises(ValueError):
        resultant(P(), P((1, 1)))


def test_discriminant_examples():
    assert discriminant(P((1, 2, 1))) == 0
    assert discriminant(P((-1, 0, 1))) == 4
    with pytest.raises(ValueError):
        discriminant(P((1, 2)))


@given(monic_of_degree(8))
@settings(max_examples=60)
def test_discriminant_matches_sylvester_route(f):
    assume(f.degree >= 1)
    n = f.degree
    assert discriminant(f) == (-1) ** (n * (n - 1) // 2) * sylvester_resultant(f, f.derivative())


def test_sturm_examples():
    assert sturm_root_count(P((-2, 0, 1)), 0, 2) == 1
    assert sturm_root_count(P((1, 0, 1)), -10, 10) == 0
    assert sturm_root_count(P((1, -2, 1)) * P((-2, 0, 1)), -3, 3) == 3
    with pytest.raises(ValueError):
        sturm_root_count(P((-1, 1)), 1, 2)


@given(st.lists(st.fractions(-10, 10, max_denominator=6), min_size=1, max_size=5, unique=True))
def test_sturm_counts_constructed_roots(roots):
    f = P((1,))
    for r in roots:
        f = f * P((-r.numerator, r.denominator))
    lo, hi = Fraction(-21, 2) + Fraction(1, 97), Fraction(3, 1) + Fraction(1, 89)
    assert sturm_root_count(f, lo, hi) == sum(1 for r in roots if lo < r < hi)


def test_reduce_mod_examples():
    assert reduce_mod(build(11).g, 7) == ModPolynomial((3, 2, 4, 0, 1), 7)
    assert reduce_mod(P((7, 14, -21)), 7).is_zero()
    assert set(reduce_mod(fekete_polynomial(13), 2).coeffs) <= {0, 1}


def test_reciprocal_examples():
    assert reciprocal_check(build(7).f)
    assert not reciprocal_check(P((0, 1, 1)))
    assert reciprocal_check(P((1,)))


def test_fold_examples():
    assert fold_to_reduced(build(7).f) == P((-1, 2, 1))
    assert fold_to_reduced(build(11).f) == P((3, 2, -3, 0, 1))
    assert fold_to_reduced(P((1, 0, 1))) == P((0, 1))
    with pytest.raises(ValueError):
        fold_to_reduced(P((0, 1, 1)))


def test_fold_round_trip_for_fekete():
    for p in primes_up_to(200):
        if p < 7:
            continue
        f = build(p).f
        g = fold_to_reduced(f)
        assert g.degree * 2 == f.degree
        assert fold_by_dickson_sum(f) == g
        assert unfold(g) == f


@given(monic_of_degree(6))
def test_unfold_then_fold(g):
    assert fold_to_reduced(unfold(g)) == g


def test_gcd_over_z():
    a, b = P((-1, 1)), P((2, 1))
    assert gcd(a * a * b, a * P((5, 0, 1))) == a


def test_mod_polynomial_arithmetic():
    f = ModPolynomial((1, 2, 3), 5)
    g = ModPolynomial((4, 1), 5)
    qt, r = f.divrem(g)
    assert qt * g + r == f
    assert (f * g).degree == 3
    assert f.monic().lc == 1


def test_factorization_pattern():
    pat = FactorizationPattern([(2, 1), (1, 1), (1, 1)])
    assert list(pat) == [(1, 1), (1, 1), (2, 1)]
    assert pat.degree == 4 and pat.is_squarefree()
    assert FactorizationPattern.from_json(pat.to_json()) == pat
    assert not FactorizationPattern([(1, 2)]).is_squarefree()
    with pytest.raises(ValueError):
        FactorizationPattern([(0, 1)])
