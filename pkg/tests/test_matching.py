import pytest
from hypothesis import given

from conftest import monomial_ideals
from matchpow import Ambient, generator_matchings, matching_power, minimize_generators, monomial_grade
from matchpow.errors import CapExceededError
from matchpow.formats import parse_ideal
from matchpow.matching import MAX_GRADE_GENS, matching_powers, max_set_packing
from oracles import brute_grade, brute_matching_power

EX1 = parse_ideal("x1^2\nx2^2\nx3^2\nx3*x4\nx5^5").ideal


def test_example_pairs():
    assert len(generator_matchings(EX1, 2)) == 9
    assert generator_matchings(EX1, 5) == []


def test_k1_is_all_singletons():
    assert generator_matchings(EX1, 1) == [(t,) for t in range(5)]
    assert matching_power(EX1, 1) == EX1


def test_example_fourth_power():
    assert set(matching_power(EX1, 4).to_strings()) == {"x1^2*x2^2*x3^2*x5^5", "x1^2*x2^2*x3*x4*x5^5"}
    assert matching_power(EX1, 5).is_zero()


def test_grade():
    assert monomial_grade(EX1) == 4
    cubic = parse_ideal("x1*x2^2\nx2*x3^2\nx3*x4^2\nx4*x1^2").ideal
    assert monomial_grade(cubic) == 2


def test_complete_intersection():
    ci = parse_ideal("a^2*b\nc*d^3\ne").ideal
    assert monomial_grade(ci) == 3
    assert set(matching_power(ci, 2).to_strings()) == {"a^2*b*c*d^3", "a^2*b*e", "c*d^3*e"}
    assert matching_power(ci, 3).to_strings() == ["a^2*b*c*d^3*e"]


def test_squarefree_power_of_triangle_and_path():
    # x1x2, x2x3, x3x4: only x1x2 * x3x4 is a 2-matching
    P4 = parse_ideal("x1*x2\nx2*x3\nx3*x4").ideal
    assert matching_power(P4, 2).to_strings() == ["x1*x2*x3*x4"]
    triangle = parse_ideal("a*b\nb*c\na*c").ideal
    assert matching_power(triangle, 2).is_zero()


def test_zero_ideal_grade():
    assert monomial_grade(minimize_generators(Ambient.standard(2), [])) == 0


def test_set_packing():
    assert max_set_packing([0b11, 0b110, 0b1100]) == 2
    assert max_set_packing([]) == 0


def test_grade_cap():
    n = MAX_GRADE_GENS + 1
    gens = [[1 if i == t else 0 for i in range(n)] for t in range(n)]
    with pytest.raises(CapExceededError):
        monomial_grade(minimize_generators(Ambient.standard(n), gens))


def test_matching_powers_list():
    powers = matching_powers(EX1)
    assert [len(J.gens) for J in (powers[k] for k in sorted(powers))] == [5, 9, 7, 2]


@given(monomial_ideals(max_n=5, max_gens=6))
def test_power_matches_brute_force(I):
    for k in range(1, len(I.gens) + 1):
        assert set(matching_power(I, k).gens) == brute_matching_power(I.gens, k)


@given(monomial_ideals(max_n=5, max_gens=6))
def test_grade_matches_brute_force(I):
    nu = monomial_grade(I)
    assert nu == brute_grade(I.gens)
    assert not matching_power(I, nu).is_zero()
    assert matching_power(I, nu + 1).is_zero()


@given(monomial_ideals(max_n=5, max_gens=6))
def test_power_lies_in_ordinary_power(I):
    # every generator of I^[k] is a product of k generators of I
    for k in range(1, monomial_grade(I) + 1):
        for u in matching_power(I, k).gens:
            assert sum(u) >= k * min(sum(g) for g in I.gens)
