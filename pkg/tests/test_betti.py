from itertools import combinations
from math import comb

import pytest
from hypothesis import given

from conftest import monomial_ideals
from matchpow import (
    QQ,
    CoefficientField,
    SimplicialComplex,
    has_linear_resolution,
    homological_invariants,
    matching_power,
    multigraded_betti,
    normalized_depth,
    reduced_homology_dims,
    upper_koszul_complex,
)
from matchpow.betti import lcm_lattice
from matchpow.errors import CapExceededError, NotFullySupportedError, ZeroIdealError
from matchpow.formats import parse_ideal
from matchpow.linalg import rank
from oracles import graded, taylor_betti


def ideal(text, names=None):
    if names:
        text = "# vars: " + " ".join(names) + "\n" + text
    return parse_ideal(text).ideal


C4_D2 = ideal("a*b^2*c*d^2\na^2*b*c^2*d", "abcd")
COUNTER = ideal("x1*x2^2*x3*x4^2\nx1^2*x2*x3^2*x4\nx1^2*x2*x3*x4^2")


# -- linear algebra -------------------------------------------------------------

def test_rank_small():
    rows = [{0: 1, 1: -1}, {1: 1, 2: -1}, {0: 1, 2: -1}]
    assert rank(rows) == 2
    assert rank([{0: 2}], CoefficientField(2)) == 0
    assert rank([{0: 2}]) == 1
    assert rank([]) == 0


def test_field_parse():
    assert CoefficientField.parse("q") == QQ
    assert CoefficientField.parse("fp:7").p == 7
    assert str(CoefficientField.parse("fp")) == "fp:32003"
    with pytest.raises(ValueError):
        CoefficientField.parse("fp:8")


# -- simplicial homology ----------------------------------------------------------

def test_simplex_is_acyclic():
    full = SimplicialComplex.from_facets(range(4), [0b1111])
    assert all(h == 0 for h in reduced_homology_dims(full))


def test_irrelevant_and_void():
    assert reduced_homology_dims(SimplicialComplex.from_facets([], [0])) == [1]
    assert reduced_homology_dims(SimplicialComplex.from_facets([], [])) == []


def test_triangle_boundary():
    hollow = SimplicialComplex.from_facets(range(3), [0b011, 0b110, 0b101])
    assert reduced_homology_dims(hollow) == [0, 0, 1]


def test_projective_plane_depends_on_field():
    # six-vertex triangulation of RP^2: H~_1 = Z/2, so homology appears only mod 2
    facets = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
              (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)]
    rp2 = SimplicialComplex.from_sets(range(6), facets)
    assert sum(reduced_homology_dims(rp2, QQ)) == 0
    assert reduced_homology_dims(rp2, CoefficientField(2))[2:] == [1, 1]


# -- upper Koszul complexes ---------------------------------------------------------

def test_koszul_complex_examples():
    K = upper_koszul_complex(ideal("x1"), (1,))
    assert reduced_homology_dims(K) == [1]
    two = upper_koszul_complex(ideal("x1\nx2"), (1, 1))
    assert reduced_homology_dims(two)[1] == 1
    K = upper_koszul_complex(ideal("a*b*c*d"), (1, 1, 1, 1))
    assert reduced_homology_dims(K) == [1]


# -- Betti numbers ---------------------------------------------------------------------

def test_principal():
    B = multigraded_betti(ideal("a*b*c*d"))
    assert B.graded == {(0, 4): 1}
    inv = homological_invariants(ideal("a*b*c*d"))
    assert (inv.pd_quotient, inv.depth_quotient, inv.reg_ideal) == (1, 3, 4)


def test_four_cycle_square():
    inv = homological_invariants(C4_D2)
    assert (inv.pd_ideal, inv.pd_quotient, inv.reg_ideal) == (1, 2, 7)
    assert multigraded_betti(C4_D2).total(1) == 1


def test_maximal_ideal_is_koszul():
    n = 4
    m = ideal("\n".join(f"x{i}" for i in range(1, n + 1)))
    inv = homological_invariants(m)
    assert inv.pd_quotient == n and inv.reg_ideal == 1
    B = multigraded_betti(m)
    assert B.totals() == {i: comb(n, i + 1) for i in range(n)}


def test_complete_intersection_koszul_oracle():
    ci = ideal("a^2*b\nc*d^3\ne^2\nf*g")
    B = multigraded_betti(ci)
    degs = [3, 4, 2, 2]
    expected = {}
    for r in range(1, 5):
        for F in combinations(degs, r):
            expected[(r - 1, sum(F))] = expected.get((r - 1, sum(F)), 0) + 1
    assert B.graded == expected


def test_linear_resolution_examples():
    assert not has_linear_resolution(ideal("x1*x2^2*x3*x4^2\nx1^2*x2*x3^2*x4"))
    assert has_linear_resolution(COUNTER)
    assert has_linear_resolution(ideal("x1\nx2\nx3"))
    assert not has_linear_resolution(ideal("x1\nx2*x3"))


def test_normalized_depth_four_cycle():
    D = ideal("a*b^2\nb*c^2\nc*d^2\nd*a^2", "abcd")
    prof = normalized_depth(D)
    assert prof[2] == 1
    assert prof.values == prof.values_pd


def test_normalized_depth_quadratic_last_power():
    I = ideal("x1^2\nx1*x2\nx2^2\nx2*x3")
    prof = normalized_depth(I)
    assert prof[max(prof.values)] == 0


def test_normalized_depth_errors():
    with pytest.raises(NotFullySupportedError):
        normalized_depth(ideal("x1", names=["x1", "x2"]))
    with pytest.raises(ZeroIdealError):
        normalized_depth(parse_ideal("").ideal)


def test_generator_cap():
    # all 21 quadrics in 6 variables: over the cap, but a small lcm lattice
    quadrics = ideal("\n".join(f"x{i}*x{j}" if i != j else f"x{i}^2"
                               for i in range(1, 7) for j in range(i, 7)))
    assert len(quadrics.gens) == 21
    with pytest.raises(CapExceededError):
        multigraded_betti(quadrics)
    B = multigraded_betti(quadrics, max_gens=None)
    assert B.pd == 5 and has_linear_resolution(quadrics, max_gens=None)


def test_diagram_and_csv():
    B = multigraded_betti(ideal("a*b*c*d"))
    assert B.listing() == "0: 1 @ degree 4"
    assert B.csv_rows() == [["i", "4"], ["0", "1"]]


def test_lcm_lattice_contains_generators_and_lcm():
    gens = [(1, 0, 1), (0, 1, 1)]
    assert lcm_lattice(gens) == {(1, 0, 1), (0, 1, 1), (1, 1, 1)}


@given(monomial_ideals(max_n=4, max_gens=5))
def test_betti_matches_taylor_oracle(I):
    if I.is_unit():
        return
    assert multigraded_betti(I).multigraded == taylor_betti(I.gens)


@given(monomial_ideals(max_n=5, max_gens=5))
def test_euler_characteristic_and_pd(I):
    if I.is_unit():
        return
    B = multigraded_betti(I)
    # sum of (-1)^i beta_i(I) is 1 since S/I has rank zero
    assert B.euler_characteristic() == 1
    assert B.pd <= I.n - 1
    assert B.total(0) == len(I.gens)


@given(monomial_ideals(max_n=4, max_gens=5))
def test_prime_field_bounds_rational_betti(I):
    if I.is_unit():
        return
    q = multigraded_betti(I, QQ).multigraded
    f2 = multigraded_betti(I, CoefficientField(2)).multigraded
    assert all(f2.get(key, 0) >= v for key, v in q.items())


@given(monomial_ideals(max_n=4, max_gens=5))
def test_matching_powers_match_taylor(I):
    for k in (2, 3):
        J = matching_power(I, k)
        if J.is_zero() or J.is_unit() or len(J.gens) > 7:
            continue
        assert multigraded_betti(J).graded == graded(taylor_betti(J.gens))
