"""Reading and writing ideals and graphs.

Ideal text format: one generator per line written as ``*``-separated
``var^exp`` tokens (``x1^2*x3``; ``1`` is the unit monomial).  Blank lines
and ``#`` comments are ignored, except for an optional ``# vars: a b c``
line fixing the variable order; otherwise variables are ordered by first
appearance.

Ideal JSON: ``{"schema": 1, "vars": [...], "gens": [[e1, ..., en], ...]}``.

Graph JSON: ``{"vertices": [...], "edges": [[i, j], ...], "directed": bool,
"weights": {v: w}, "edge_weights": {"i-j": w}}``.
"""
from __future__ import annotations

import json
import re
from typing import NamedTuple

from .errors import ParseError, WeightViolationError
from .graphs import (
    EdgeWeightedGraph,
    SimpleGraph,
    WeightedOrientedGraph,
    repair_weights,
    validate_weights,
)
from .monomials import Ambient, MonomialIdeal, format_monomial, minimize_generators

SCHEMA_VERSION = 1
_NAME = re.compile(r"^[^\s*^]+$")
PLACEHOLDER_AMBIENT = Ambient(("x1",))


class ParsedIdeal(NamedTuple):
    ideal: MonomialIdeal
    changed: bool  # True when minimization altered the input list


def parse_ideal_text(text: str) -> ParsedIdeal:
    names: list = []
    fixed = False
    raw = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if stripped.startswith("#"):
            m = re.match(r"#\s*vars\s*:(.*)$", stripped)
            if m:
                declared = m.group(1).replace(",", " ").split()
                if len(set(declared)) != len(declared):
                    raise ParseError("duplicate variable in vars line", line=lineno)
                names = declared
                fixed = True
            continue
        if not stripped:
            continue
        powers = {}
        if stripped != "1":
            for tok in stripped.split("*"):
                tok = tok.strip()
                if "^" in tok:
                    name, _, exp = tok.partition("^")
                    if not exp.strip().isdigit():
                        raise ParseError(f"bad exponent in token {tok!r}", line=lineno)
                    e = int(exp)
                else:
                    name, e = tok, 1
                name = name.strip()
                if not name or not _NAME.match(name):
                    raise ParseError(f"malformed token {tok!r}", line=lineno)
                if name not in names:
                    if fixed:
                        raise ParseError(f"variable {name!r} not declared in vars line", line=lineno)
                    names.append(name)
                powers[name] = powers.get(name, 0) + e
        raw.append(powers)
    if not names:
        if raw:
            # only unit generators
            return ParsedIdeal(minimize_generators(PLACEHOLDER_AMBIENT, [(0,)] * len(raw)), len(raw) != 1)
        return ParsedIdeal(MonomialIdeal(PLACEHOLDER_AMBIENT, ()), False)
    amb = Ambient(tuple(names))
    gens = [tuple(p.get(v, 0) for v in names) for p in raw]
    I = minimize_generators(amb, gens)
    return ParsedIdeal(I, len(I.gens) != len(gens))


def parse_ideal_json(text_or_obj) -> ParsedIdeal:
    obj = json.loads(text_or_obj) if isinstance(text_or_obj, str) else text_or_obj
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object")
    if "vars" not in obj or "gens" not in obj:
        raise ParseError("missing 'vars' or 'gens'", field="vars" if "vars" not in obj else "gens")
    names = obj["vars"]
    if not isinstance(names, list) or not names:
        raise ParseError("'vars' must be a nonempty list", field="vars")
    try:
        amb = Ambient(tuple(str(v) for v in names))
    except ValueError as exc:
        raise ParseError(str(exc), field="vars") from None
    gens = obj["gens"]
    if not isinstance(gens, list):
        raise ParseError("'gens' must be a list", field="gens")
    out = []
    for t, g in enumerate(gens):
        if not isinstance(g, list) or len(g) != amb.n:
            raise ParseError(f"generator {t} must list {amb.n} exponents (ambient mismatch)", field=f"gens[{t}]")
        if not all(isinstance(e, int) and e >= 0 for e in g):
            raise ParseError(f"generator {t} has a non-integer or negative exponent", field=f"gens[{t}]")
        out.append(tuple(g))
    I = minimize_generators(amb, out)
    return ParsedIdeal(I, len(I.gens) != len(out))


def parse_ideal(text: str, fmt: str | None = None) -> ParsedIdeal:
    """Parse either format; ``fmt=None`` sniffs for a leading ``{``."""
    if fmt is None:
        fmt = "json" if text.lstrip().startswith("{") else "text"
    if fmt == "json":
        try:
            return parse_ideal_json(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    if fmt == "text":
        return parse_ideal_text(text)
    raise ValueError(f"unknown format {fmt!r}")


def ideal_to_text(I: MonomialIdeal, vars_line: bool = True) -> str:
    lines = []
    if vars_line:
        lines.append("# vars: " + " ".join(I.ambient.var_names))
    lines.extend(format_monomial(g, I.ambient.var_names) for g in I.gens)
    return "\n".join(lines) + "\n"


def ideal_to_json_obj(I: MonomialIdeal) -> dict:
    return {"schema": SCHEMA_VERSION, "vars": list(I.ambient.var_names), "gens": [list(g) for g in I.gens]}


def ideal_to_json(I: MonomialIdeal) -> str:
    return json.dumps(ideal_to_json_obj(I))


# -- graphs -------------------------------------------------------------------

def _vertex_lookup(vertices):
    table = {}
    for v in vertices:
        table[str(v)] = v
    return table


def parse_graph_json(text_or_obj, repair: bool = False):
    """Return a :class:`SimpleGraph`, :class:`EdgeWeightedGraph` or
    :class:`WeightedOrientedGraph` depending on ``directed`` and
    ``edge_weights``."""
    try:
        obj = json.loads(text_or_obj) if isinstance(text_or_obj, str) else text_or_obj
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object")
    edges = obj.get("edges")
    if not isinstance(edges, list):
        raise ParseError("'edges' must be a list", field="edges")
    for t, e in enumerate(edges):
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError("each edge must be a 2-element list", field=f"edges[{t}]")
    vertices = obj.get("vertices")
    if vertices is None:
        vertices = []
        for e in edges:
            for v in e:
                if v not in vertices:
                    vertices.append(v)
    lookup = _vertex_lookup(vertices)
    directed = bool(obj.get("directed", False))
    try:
        if directed:
            weights = {}
            for k, w in (obj.get("weights") or {}).items():
                if k not in lookup:
                    raise ParseError(f"unknown vertex {k!r}", field="weights")
                weights[lookup[k]] = w
            D = WeightedOrientedGraph(tuple(vertices), tuple(tuple(e) for e in edges), weights)
            bad = validate_weights(D)
            if bad:
                if not repair:
                    raise WeightViolationError(bad)
                D = repair_weights(D)
            return D
        G = SimpleGraph.from_edges([tuple(e) for e in edges], vertices=tuple(vertices))
        ew = obj.get("edge_weights")
        if ew:
            weights = {}
            for k, w in ew.items():
                a, sep, b = k.partition("-")
                if not sep or a not in lookup or b not in lookup:
                    raise ParseError(f"bad edge key {k!r}", field="edge_weights")
                weights[frozenset((lookup[a], lookup[b]))] = w
            return EdgeWeightedGraph(G, weights)
        return G
    except ParseError:
        raise
    except WeightViolationError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc), field="edges") from None


def graph_to_json_obj(G) -> dict:
    if isinstance(G, WeightedOrientedGraph):
        return {
            "schema": SCHEMA_VERSION,
            "vertices": list(G.vertices),
            "edges": [list(a) for a in G.arcs],
            "directed": True,
            "weights": {str(v): w for v, w in G.weights.items()},
        }
    if isinstance(G, EdgeWeightedGraph):
        obj = graph_to_json_obj(G.graph)
        pos = G.graph.pos
        obj["edge_weights"] = {
            "-".join(str(v) for v in sorted(e, key=pos.__getitem__)): w for e, w in G.edge_weights.items()
        }
        return obj
    return {
        "schema": SCHEMA_VERSION,
        "vertices": list(G.vertices),
        "edges": [list(e) for e in G.edge_list()],
        "directed": False,
    }


def graph_to_json(G) -> str:
    return json.dumps(graph_to_json_obj(G))
