import pytest

from fekete.arith import primes_up_to
from fekete.class_numbers import (
    berndt_half_sum,
    class_number_by_character_sum,
    class_number_by_forms,
    fundamental_discriminant,
    h,
)


@pytest.mark.parametrize("m,D", [(-7, -7), (-5, -20), (-13, -52), (-1, -4), (-3, -3)])
def test_fundamental_discriminant(m, D):
    assert fundamental_discriminant(m).D == D


def test_fundamental_discriminant_rejects_non_squarefree():
    with pytest.raises(ValueError):
        fundamental_discriminant(-12)


@pytest.mark.parametrize("D,expected", [(-7, 1), (-23, 3), (-4, 1), (-3, 1), (-20, 2), (-47, 5), (-163, 1)])
def test_class_number_by_forms(D, expected):
    assert class_number_by_forms(fundamental_discriminant(D if D % 4 == 1 else D // 4)) == expected


@pytest.mark.parametrize("p,expected", [(7, 1), (11, 1), (23, 3)])
def test_character_sum_examples(p, expected):
    assert class_number_by_character_sum(p) == expected


@pytest.mark.parametrize("p,expected", [(7, 1), (11, 3), (23, 3)])
def test_berndt_half_sum_examples(p, expected):
    assert berndt_half_sum(p) == expected


def test_two_routes_agree():
    for p in primes_up_to(3000):
        if p > 3 and p % 4 == 3:
            hp = h(-p)
            assert class_number_by_character_sum(p) == hp, p
            l2 = 1 if p % 8 == 7 else -1
            assert berndt_half_sum(p) == (2 - l2) * hp, p


def test_h_drops_square_factors():
    assert h(-4 * 7) == h(-7)
    assert h(-9 * 5) == h(-5)


def test_character_sum_rejects_wrong_class():
    with pytest.raises(ValueError):
        class_number_by_character_sum(13)
