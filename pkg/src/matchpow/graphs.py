"""Simple, weighted oriented and edge-weighted graphs and their edge ideals.

Vertex ``v`` corresponds to the variable named ``x<v>`` when ``v`` is an
int and ``str(v)`` otherwise; rings list the variables in vertex order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import networkx as nx

from .errors import CapExceededError, WeightViolationError
from .monomials import Ambient, MonomialIdeal, minimize_generators

MAX_LPATH_VERTICES = 20


def var_name(v) -> str:
    return f"x{v}" if isinstance(v, int) else str(v)


def _edge(u, v) -> frozenset:
    return frozenset((u, v))


@dataclass(frozen=True)
class SimpleGraph:
    """Finite simple graph.  ``edges`` is a frozenset of 2-element frozensets."""

    vertices: tuple
    edges: frozenset
    allow_isolated: bool = False

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        es = frozenset(frozenset(e) for e in self.edges)
        object.__setattr__(self, "edges", es)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertices")
        vs = set(self.vertices)
        for e in es:
            if len(e) != 2:
                raise ValueError(f"loop or malformed edge {sorted(e, key=str)}")
            if not e <= vs:
                raise ValueError(f"edge {sorted(e, key=str)} has an endpoint outside the vertex set")
        if not self.allow_isolated:
            covered = set().union(*es) if es else set()
            isolated = [v for v in self.vertices if v not in covered]
            if isolated:
                raise ValueError(f"isolated vertices {isolated} (pass allow_isolated=True)")

    @classmethod
    def from_edges(cls, edges, vertices=None, allow_isolated=False) -> "SimpleGraph":
        edges = [tuple(e) for e in edges]
        if vertices is None:
            vertices = []
            for e in edges:
                for v in e:
                    if v not in vertices:
                        vertices.append(v)
        return cls(tuple(vertices), frozenset(frozenset(e) for e in edges), allow_isolated)

    @property
    def pos(self) -> dict:
        return {v: t for t, v in enumerate(self.vertices)}

    def edge_list(self) -> list:
        """Edges as ordered pairs, sorted by vertex position."""
        pos = self.pos
        out = [tuple(sorted(e, key=pos.__getitem__)) for e in self.edges]
        return sorted(out, key=lambda e: (pos[e[0]], pos[e[1]]))

    def adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for u, v in self.edge_list():
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edge_list())
        return g

    def induced(self, W: Iterable) -> "SimpleGraph":
        W = set(W)
        if not W <= set(self.vertices):
            raise ValueError("vertex subset is not contained in V(G)")
        return SimpleGraph(
            tuple(v for v in self.vertices if v in W),
            frozenset(e for e in self.edges if e <= W),
            allow_isolated=True,
        )

    def ambient(self) -> Ambient:
        return Ambient(tuple(var_name(v) for v in self.vertices))


@dataclass(frozen=True)
class WeightedOrientedGraph:
    """Oriented simple graph with vertex weights ``w: V -> Z>=1``.

    ``arcs`` holds ordered pairs ``(i, j)`` (an edge directed from ``i`` to
    ``j``); missing weights default to 1.
    """

    vertices: tuple
    arcs: tuple
    weights: dict = field(default_factory=dict)
    allow_isolated: bool = False

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arcs", tuple(tuple(a) for a in self.arcs))
        w = {v: int(self.weights.get(v, 1)) for v in self.vertices}
        extra = set(self.weights) - set(self.vertices)
        if extra:
            raise ValueError(f"weights given for unknown vertices {sorted(extra, key=str)}")
        if any(x < 1 for x in w.values()):
            raise ValueError("weights must be >= 1")
        object.__setattr__(self, "weights", w)
        seen = set()
        for a in self.arcs:
            if len(a) != 2:
                raise ValueError(f"malformed arc {a}")
            e = _edge(*a)
            if e in seen:
                raise ValueError(f"edge {a} is oriented more than once")
            seen.add(e)
        # validates vertices, loops and isolation
        self.underlying()

    def underlying(self) -> SimpleGraph:
        return SimpleGraph(self.vertices, frozenset(_edge(*a) for a in self.arcs), self.allow_isolated)

    def sources(self) -> list:
        heads = {j for _, j in self.arcs}
        return [v for v in self.vertices if v not in heads]

    def head_weight_sum(self) -> int:
        return sum(self.weights.values())

    def with_weights(self, weights: dict) -> "WeightedOrientedGraph":
        return WeightedOrientedGraph(self.vertices, self.arcs, dict(weights), self.allow_isolated)

    def ambient(self) -> Ambient:
        return Ambient(tuple(var_name(v) for v in self.vertices))


@dataclass(frozen=True)
class EdgeWeightedGraph:
    """Simple graph with edge weights ``w: E -> Z>=1`` (default 1)."""

    graph: SimpleGraph
    edge_weights: dict = field(default_factory=dict)

    def __post_init__(self):
        w = {}
        for e in self.graph.edges:
            w[e] = int(self.edge_weights.get(e, 1))
        extra = set(frozenset(e) for e in self.edge_weights) - set(self.graph.edges)
        if extra:
            raise ValueError("edge weights given for non-edges")
        if any(x < 1 for x in w.values()):
            raise ValueError("edge weights must be >= 1")
        object.__setattr__(self, "edge_weights", w)


@dataclass(frozen=True)
class Matching:
    edges: frozenset

    @property
    def vertices(self) -> frozenset:
        return frozenset().union(*self.edges) if self.edges else frozenset()

    def __len__(self):
        return len(self.edges)


# -- edge ideals ------------------------------------------------------------

def edge_ideal(G: SimpleGraph) -> MonomialIdeal:
    pos = G.pos
    gens = []
    for u, v in G.edge_list():
        g = [0] * len(G.vertices)
        g[pos[u]] = g[pos[v]] = 1
        gens.append(g)
    return minimize_generators(G.ambient(), gens)


def validate_weights(D: WeightedOrientedGraph) -> list:
    """Sources carrying weight > 1 (empty list when ``D`` is valid)."""
    return [v for v in D.sources() if D.weights[v] > 1]


def repair_weights(D: WeightedOrientedGraph) -> WeightedOrientedGraph:
    """Reset the weight of every source to 1."""
    w = dict(D.weights)
    for v in D.sources():
        w[v] = 1
    return D.with_weights(w)


def oriented_edge_ideal(D: WeightedOrientedGraph) -> MonomialIdeal:
    """``I(D) = (x_i x_j^{w_j} : (i, j) in E(D))``."""
    bad = validate_weights(D)
    if bad:
        raise WeightViolationError(bad)
    pos = {v: t for t, v in enumerate(D.vertices)}
    gens = []
    for i, j in D.arcs:
        g = [0] * len(D.vertices)
        g[pos[i]] = 1
        g[pos[j]] = D.weights[j]
        gens.append(g)
    I = minimize_generators(D.ambient(), gens)
    assert len(I.gens) == len(D.arcs), "edge ideal generators must already be minimal"
    return I


def edge_weighted_ideal(Gw: EdgeWeightedGraph) -> MonomialIdeal:
    """``I(G_w) = ((x_i x_j)^{w(e)} : e = {i, j})``."""
    G = Gw.graph
    pos = G.pos
    gens = []
    for u, v in G.edge_list():
        w = Gw.edge_weights[_edge(u, v)]
        g = [0] * len(G.vertices)
        g[pos[u]] = g[pos[v]] = w
        gens.append(g)
    return minimize_generators(G.ambient(), gens)


# -- matchings ----------------------------------------------------------------

def matching_number(G: SimpleGraph) -> int:
    """Maximum matching size by branch and bound over vertices."""
    adj = G.adjacency()
    best = 0

    def rec(free, size):
        nonlocal best
        if size > best:
            best = size
        live = [v for v in free if adj[v] & free]
        if size + len(live) // 2 <= best:
            return
        if not live:
            return
        v = min(live, key=lambda x: len(adj[x] & free))
        rest = free - {v}
        for u in adj[v] & free:
            rec(rest - {u}, size + 1)
        rec(rest, size)

    rec(frozenset(G.vertices), 0)
    return best


def _induced_search(G: SimpleGraph, value) -> int:
    """Max of ``sum(value(e))`` over induced matchings of ``G``."""
    adj = G.adjacency()
    edges = G.edge_list()
    vals = [value(e) for e in edges]
    # blocking[t] = edges that cannot coexist with edge t in an induced matching
    blocking = []
    for u, v in edges:
        near = {u, v} | adj[u] | adj[v]
        blocking.append({s for s, (a, b) in enumerate(edges) if a in near or b in near})
    best = 0

    def rec(avail, total):
        nonlocal best
        if total > best:
            best = total
        if not avail or total + sum(vals[t] for t in avail) <= best:
            return
        t = min(avail)
        rec(avail - blocking[t], total + vals[t])
        rec(avail - {t}, total)

    rec(frozenset(range(len(edges))), 0)
    return best


def induced_matching_number(G: SimpleGraph) -> int:
    return _induced_search(G, lambda e: 1)


def weighted_induced_matching_number(D: WeightedOrientedGraph) -> int:
    """Max over induced matchings of the sum of head weights."""
    bad = validate_weights(D)
    if bad:
        raise WeightViolationError(bad)
    head = {}
    for i, j in D.arcs:
        head[_edge(i, j)] = j
    return _induced_search(D.underlying(), lambda e: D.weights[head[_edge(*e)]])


def perfect_matchings(G: SimpleGraph) -> list:
    """All perfect matchings (exhaustive)."""
    adj = G.adjacency()
    pos = G.pos
    out = []

    def rec(free, chosen):
        if not free:
            out.append(Matching(frozenset(chosen)))
            return
        v = min(free, key=pos.__getitem__)
        for u in sorted(adj[v] & free, key=pos.__getitem__):
            chosen.append(_edge(u, v))
            rec(free - {u, v}, chosen)
            chosen.pop()

    if len(G.vertices) % 2 == 0:
        rec(frozenset(G.vertices), [])
    return out


def longest_induced_path(G: SimpleGraph) -> int:
    """Maximal number of edges of an induced path (exhaustive DFS)."""
    if len(G.vertices) > MAX_LPATH_VERTICES:
        raise CapExceededError("longest induced path vertices", len(G.vertices), MAX_LPATH_VERTICES)
    adj = G.adjacency()
    best = 0

    def extend(path, blocked):
        nonlocal best
        if len(path) - 1 > best:
            best = len(path) - 1
        last = path[-1]
        for u in adj[last]:
            if u in blocked:
                continue
            # u must not touch any path vertex except the last one
            path.append(u)
            extend(path, blocked | adj[last] | {last})
            path.pop()

    for v in G.vertices:
        extend([v], {v})
    return best


# -- blocks and cycles --------------------------------------------------------

@dataclass(frozen=True)
class Block:
    vertices: frozenset
    edges: frozenset
    kind: str  # "edge", "odd cycle" or "other"


@dataclass(frozen=True)
class BlockStructure:
    blocks: tuple
    has_even_cycle: bool

    def all_edges_or_odd_cycles(self) -> bool:
        return all(b.kind in ("edge", "odd cycle") for b in self.blocks)


def has_even_cycle(G: SimpleGraph) -> bool:
    """Exhaustive search over all cycles of ``G``."""
    g = G.to_networkx()
    return any(len(c) % 2 == 0 for c in nx.simple_cycles(g))


def block_structure(G: SimpleGraph) -> BlockStructure:
    g = G.to_networkx()
    blocks = []
    for comp in nx.biconnected_component_edges(g):
        es = frozenset(frozenset(e) for e in comp)
        vs = frozenset().union(*es)
        if len(es) == 1:
            kind = "edge"
        elif len(es) == len(vs) and all(g.subgraph(vs).degree(v) == 2 for v in vs) and len(vs) % 2 == 1:
            kind = "odd cycle"
        else:
            kind = "other"
        blocks.append(Block(vs, es, kind))
    blocks.sort(key=lambda b: sorted(G.pos[v] for v in b.vertices))
    return BlockStructure(tuple(blocks), has_even_cycle(G))


def at_most_one_perfect_matching_everywhere(G: SimpleGraph) -> bool:
    """Every subgraph has at most one perfect matching.

    Two perfect matchings of a subgraph ``H`` are also perfect matchings of
    the induced subgraph on ``V(H)``, so checking induced subgraphs on
    even vertex subsets is exhaustive.
    """
    from itertools import combinations

    vs = G.vertices
    for r in range(2, len(vs) + 1, 2):
        for W in combinations(vs, r):
            if len(perfect_matchings(G.induced(W))) > 1:
                return False
    return True


def induced_subgraph(D: WeightedOrientedGraph, W: Iterable) -> WeightedOrientedGraph:
    W = set(W)
    if not W <= set(D.vertices):
        raise ValueError(f"{sorted(W - set(D.vertices), key=str)} not in V(D)")
    verts = tuple(v for v in D.vertices if v in W)
    arcs = tuple(a for a in D.arcs if a[0] in W and a[1] in W)
    return WeightedOrientedGraph(verts, arcs, {v: D.weights[v] for v in verts}, allow_isolated=True)


# -- named families -----------------------------------------------------------

def path_graph(n: int) -> SimpleGraph:
    """``P_n`` on vertices ``1..n`` with ``n - 1`` edges."""
    return SimpleGraph.from_edges([(i, i + 1) for i in range(1, n)], vertices=tuple(range(1, n + 1)))


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges([(i, i % n + 1) for i in range(1, n + 1)], vertices=tuple(range(1, n + 1)))


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(
        [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)], vertices=tuple(range(1, n + 1))
    )


def orient(G: SimpleGraph, arcs=None, weights=None) -> WeightedOrientedGraph:
    """Orient ``G`` (each edge from its earlier to its later vertex unless
    ``arcs`` overrides) with the given vertex weights."""
    if arcs is None:
        arcs = G.edge_list()
    return WeightedOrientedGraph(G.vertices, tuple(arcs), dict(weights or {}), G.allow_isolated)
