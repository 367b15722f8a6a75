import pytest
from hypothesis import given

from conftest import monomial_ideals
from matchpow import (
    Ambient,
    MonomialIdeal,
    bounding_multidegree,
    divides,
    initial_degree,
    lcm,
    localize,
    minimize_generators,
    polarize,
    radical,
    support,
    support_disjoint,
    var_degree,
)
from matchpow.errors import AmbientMismatchError, ZeroIdealError
from matchpow.formats import parse_ideal
from matchpow.monomials import depolarize, format_monomial, gcd, same_ideal_by_names

X5 = Ambient.standard(5)
EX1 = ["x1^2", "x2^2", "x3^2", "x3*x4", "x5^5"]


def ideal(*terms, names=None):
    text = "\n".join(terms)
    if names:
        text = "# vars: " + " ".join(names) + "\n" + text
    return parse_ideal(text).ideal


def test_support():
    assert support((2, 0, 1)) == {0, 2}
    assert support((0, 0, 0)) == frozenset()
    assert support((0, 0, 1, 1, 0)) == {2, 3}


def test_var_degree():
    assert var_degree((0, 0, 0, 0, 5), 4) == 5
    assert var_degree((0, 0, 0), 1) == 0
    assert var_degree((1, 2, 0, 0), 1) == 2


def test_lcm():
    ab2cd2, a2bc2d = (1, 2, 1, 2), (2, 1, 2, 1)
    assert lcm(ab2cd2, a2bc2d) == (2, 2, 2, 2)
    assert lcm(ab2cd2, (0, 0, 0, 0)) == ab2cd2
    assert lcm(ab2cd2, ab2cd2) == ab2cd2
    assert gcd(ab2cd2, a2bc2d) == (1, 1, 1, 1)


def test_lcm_rejects_mixed_lengths():
    with pytest.raises(AmbientMismatchError):
        lcm((1, 0), (1, 0, 0))


def test_divides():
    assert divides((0, 0, 1, 1), (0, 0, 2, 1))
    assert not divides((0, 0, 2, 0), (0, 0, 1, 1))
    assert divides((1, 1, 0), (1, 2, 0))


def test_support_disjoint():
    assert support_disjoint((2, 0, 0, 0), (0, 2, 0, 0))
    assert not support_disjoint((0, 0, 2, 0), (0, 0, 1, 1))
    assert support_disjoint((0, 0, 2, 0), (0, 0, 0, 0))


def test_minimize_generators():
    I = minimize_generators(Ambient.standard(2), [(1, 0), (1, 1)])
    assert I.gens == ((1, 0),)
    assert minimize_generators(X5, []).is_zero()


def test_minimize_two_incomparable():
    I = ideal("a*b^2*c*d^2", "a^2*b*c^2*d")
    assert len(I.gens) == 2


def test_minimize_keeps_input_order_of_variables():
    I = ideal("d*a^2", "a*b^2")
    assert I.ambient.var_names == ("d", "a", "b")


def test_initial_degree():
    assert initial_degree(ideal(*EX1)) == 2
    assert initial_degree(ideal("a*b^2*c*d^2", "a^2*b*c^2*d")) == 6
    assert initial_degree(ideal("a*b*c*d")) == 4
    with pytest.raises(ZeroIdealError):
        initial_degree(minimize_generators(X5, []))


def test_bounding_multidegree():
    I = ideal(*EX1)
    assert bounding_multidegree(I) == (2, 2, 2, 1, 5)
    assert sum(bounding_multidegree(I)) == 12
    D = ideal("a*b^2", "b*c^2", "c*d^2", "d*a^2", names="abcd")
    assert bounding_multidegree(D) == (2, 2, 2, 2)
    assert bounding_multidegree(ideal("x1*x2", "x2*x3")) == (1, 1, 1)


def test_radical():
    assert radical(ideal("x1^2", "x3*x4", names=["x1", "x3", "x4"])).to_strings() == ["x1", "x3*x4"]
    J = ideal("a*b^2*c*d^2", "a^2*b*c^2*d")
    assert radical(J).to_strings() == ["a*b*c*d"]
    I = ideal("x1*x2", "x2*x3")
    assert radical(I) == I


def test_polarize_single_variable():
    P = polarize(ideal("x1^2"))
    assert P.to_strings() == ["x_{1,1}*x_{1,2}"]


def test_polarize_quadratic_example():
    P = polarize(ideal("x1^2", "x1*x2", "x2^2"))
    assert set(P.to_strings()) == {"x_{1,1}*x_{1,2}", "x_{1,1}*x_{2,1}", "x_{2,1}*x_{2,2}"}


def test_localize():
    I = ideal("x1*x2", "x2*x3")
    L = localize(I, {1, 2})
    assert L.to_strings() == ["x2"]
    assert localize(I, range(3)) == I


def test_format_monomial():
    assert format_monomial((2, 0, 1), ("a", "b", "c")) == "a^2*c"
    assert format_monomial((0, 0), ("a", "b")) == "1"


def test_unit_and_zero():
    Z = minimize_generators(X5, [])
    assert Z.is_zero() and not Z.is_unit()
    U = minimize_generators(X5, [(0,) * 5, (1, 0, 0, 0, 0)])
    assert U.is_unit() and U.gens == ((0,) * 5,)


@given(monomial_ideals())
def test_minimize_is_idempotent(I):
    assert minimize_generators(I.ambient, I.gens) == I
    assert not any(u != v and divides(u, v) for u in I.gens for v in I.gens)


@given(monomial_ideals())
def test_radical_is_squarefree_and_between(I):
    R = radical(I)
    assert R.is_squarefree()
    # I is contained in its radical, and a power of each radical generator lies in I
    assert all(R.contains(u) for u in I.gens)
    top = max(max(g) for g in I.gens)
    assert all(I.contains(tuple(e * top for e in r)) for r in R.gens)


@given(monomial_ideals())
def test_polarization_is_squarefree_and_reversible(I):
    P = polarize(I)
    assert P.is_squarefree()
    assert len(P.gens) == len(I.gens)
    assert depolarize(P, I.ambient) == I
    assert sum(bounding_multidegree(I)) == P.n


@given(monomial_ideals(), monomial_ideals())
def test_lcm_is_least_common_multiple(I, J):
    u = I.gens[0]
    v = tuple(J.gens[0][i] if i < len(J.gens[0]) else 0 for i in range(len(u)))
    m = lcm(u, v)
    assert divides(u, m) and divides(v, m)
    assert all(m[i] == max(u[i], v[i]) for i in range(len(u)))


def test_same_ideal_by_names():
    I = ideal("a*b", "b*c")
    J = ideal("c*b", "b*a", names="cba")
    assert same_ideal_by_names(I, J)
    assert isinstance(I, MonomialIdeal)
