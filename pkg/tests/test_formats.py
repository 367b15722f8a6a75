import json

import pytest
from hypothesis import given

from conftest import monomial_ideals, simple_graphs, weighted_oriented_graphs
from matchpow import EdgeWeightedGraph, SimpleGraph, WeightedOrientedGraph
from matchpow.errors import ParseError, WeightViolationError
from matchpow.formats import (
    graph_to_json,
    ideal_to_json,
    ideal_to_text,
    parse_graph_json,
    parse_ideal,
)
from matchpow.graphs import repair_weights


def test_text_four_cycle():
    parsed = parse_ideal("# oriented 4-cycle\na*b^2\nb*c^2\n\nc*d^2\nd*a^2\n")
    I = parsed.ideal
    assert I.ambient.var_names == ("a", "b", "c", "d")
    assert set(I.to_strings()) == {"a*b^2", "b*c^2", "c*d^2", "a^2*d"}
    assert not parsed.changed


def test_vars_line_fixes_order():
    I = parse_ideal("# vars: d c b a\na*b\n").ideal
    assert I.ambient.var_names == ("d", "c", "b", "a")
    assert I.gens == ((0, 0, 1, 1),)


def test_nonminimal_input_is_flagged():
    parsed = parse_ideal("x1\nx1*x2\n")
    assert parsed.changed and parsed.ideal.to_strings() == ["x1"]


def test_empty_input_is_zero_ideal():
    assert parse_ideal("").ideal.is_zero()
    assert parse_ideal("# nothing here\n\n").ideal.is_zero()


def test_unit_line():
    assert parse_ideal("1\n").ideal.is_unit()


def test_parse_error_reports_line():
    with pytest.raises(ParseError) as err:
        parse_ideal("x1*x2\nx3^y\n")
    assert err.value.line == 2
    with pytest.raises(ParseError) as err:
        parse_ideal("# vars: a b\na*c\n")
    assert err.value.line == 2
    with pytest.raises(ParseError):
        parse_ideal("x1**x2\n")


def test_json_errors_report_field():
    with pytest.raises(ParseError) as err:
        parse_ideal(json.dumps({"vars": ["a", "b"], "gens": [[1, 0], [1]]}))
    assert err.value.field == "gens[1]"
    with pytest.raises(ParseError) as err:
        parse_ideal(json.dumps({"gens": []}))
    assert err.value.field == "vars"
    with pytest.raises(ParseError) as err:
        parse_ideal('{"vars": [')
    assert err.value.line == 1


def test_json_ideal():
    obj = {"schema": 1, "vars": ["x", "y"], "gens": [[2, 0], [1, 1], [0, 2]]}
    assert set(parse_ideal(json.dumps(obj)).ideal.to_strings()) == {"x^2", "x*y", "y^2"}


@given(monomial_ideals())
def test_text_round_trip(I):
    assert parse_ideal(ideal_to_text(I)).ideal == I


@given(monomial_ideals())
def test_json_round_trip(I):
    text = ideal_to_json(I)
    assert json.loads(text)["schema"] == 1
    assert parse_ideal(text).ideal == I


def test_graph_json_kinds():
    G = parse_graph_json({"edges": [[1, 2], [2, 3]]})
    assert isinstance(G, SimpleGraph) and G.vertices == (1, 2, 3)
    Gw = parse_graph_json({"edges": [[1, 2]], "edge_weights": {"1-2": 3}})
    assert isinstance(Gw, EdgeWeightedGraph) and Gw.edge_weights == {frozenset((1, 2)): 3}
    D = parse_graph_json({"edges": [["a", "b"]], "directed": True, "weights": {"b": 4}})
    assert isinstance(D, WeightedOrientedGraph) and D.weights == {"a": 1, "b": 4}


def test_graph_source_weight_violation_and_repair():
    obj = {"edges": [[1, 2]], "directed": True, "weights": {"1": 3, "2": 2}}
    with pytest.raises(WeightViolationError) as err:
        parse_graph_json(obj)
    assert err.value.sources == (1,)
    D = parse_graph_json(obj, repair=True)
    assert D.weights == {1: 1, 2: 2}


def test_graph_json_errors():
    with pytest.raises(ParseError) as err:
        parse_graph_json({"edges": [[1, 2, 3]]})
    assert err.value.field == "edges[0]"
    with pytest.raises(ParseError):
        parse_graph_json({"edges": [[1, 1]]})
    with pytest.raises(ParseError) as err:
        parse_graph_json({"edges": [[1, 2]], "edge_weights": {"1-9": 2}})
    assert err.value.field == "edge_weights"
    with pytest.raises(ParseError):
        parse_graph_json("[1, 2]")


@given(simple_graphs())
def test_simple_graph_round_trip(G):
    assert parse_graph_json(graph_to_json(G)) == G


@given(weighted_oriented_graphs())
def test_oriented_graph_round_trip(D):
    D = repair_weights(D)
    assert parse_graph_json(graph_to_json(D)) == D
