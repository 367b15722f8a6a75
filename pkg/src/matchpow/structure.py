"""Structural tests for equigenerated monomial ideals.

Every test returns a verdict together with a witness that can be checked
independently: an exchange failure ``(u, v, i)`` for polymatroidality, a
disconnected pair ``(u, v)`` for linear relations, and an admissible
ordering for linear quotients.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .betti import single_degree
from .errors import CapExceededError, MixedDegreesError
from .monomials import MonomialIdeal, colon, lcm

MAX_LINQUOT_GENS = 12


def _degree(I: MonomialIdeal) -> int:
    d = single_degree(I)
    if d is None:
        raise MixedDegreesError(f"generators of {I} have degrees {sorted(set(I.degrees()))}")
    return d


@dataclass(frozen=True)
class SyzygyGraph:
    """Vertices are the generators; ``{u, v}`` is an edge iff
    ``deg lcm(u, v) = d + 1``.  Edges are index pairs ``(s, t)`` with ``s < t``."""

    vertices: tuple
    edges: frozenset
    degree: int

    def neighbours(self, s: int) -> list:
        return [t for e in self.edges for t in e if s in e and t != s]

    def adjacency(self) -> dict:
        adj = {s: set() for s in range(len(self.vertices))}
        for s, t in self.edges:
            adj[s].add(t)
            adj[t].add(s)
        return adj


def syzygy_graph(I: MonomialIdeal) -> SyzygyGraph:
    d = _degree(I)
    gens = I.gens
    edges = set()
    for s in range(len(gens)):
        for t in range(s + 1, len(gens)):
            if sum(lcm(gens[s], gens[t])) == d + 1:
                edges.add((s, t))
    return SyzygyGraph(gens, frozenset(edges), d)


class Verdict(NamedTuple):
    holds: bool
    witness: object = None

    def __bool__(self):
        return self.holds


def is_linearly_related(I: MonomialIdeal) -> Verdict:
    """Connectivity criterion: for all generators ``u, v``, ``u`` and ``v``
    are joined by a path of the syzygy graph inside the generators dividing
    ``lcm(u, v)``.  Fails with the first disconnected pair.

    Linearly related ideals are generated in a single degree, so mixed
    degrees give ``False`` with a pair of generators of different degrees.
    """
    if single_degree(I) is None:
        low = min(I.gens, key=sum)
        return Verdict(False, (low, next(g for g in I.gens if sum(g) != sum(low))))
    G = syzygy_graph(I)
    gens = I.gens
    m = len(gens)
    adj = [0] * m
    for s, t in G.edges:
        adj[s] |= 1 << t
        adj[t] |= 1 << s
    # below[i][e]: generators with x_i-degree <= e, as a bitmask
    top = [max(g[i] for g in gens) for i in range(I.n)]
    below = []
    for i in range(I.n):
        masks = [0] * (top[i] + 1)
        for r, g in enumerate(gens):
            for e in range(g[i], top[i] + 1):
                masks[e] |= 1 << r
        below.append(masks)
    everyone = (1 << m) - 1
    for s in range(m):
        for t in range(s + 1, m):
            allowed = everyone
            for i, e in enumerate(lcm(gens[s], gens[t])):
                allowed &= below[i][e]
            seen = frontier = 1 << s
            while frontier and not seen >> t & 1:
                nxt = 0
                while frontier:
                    b = frontier & -frontier
                    frontier ^= b
                    nxt |= adj[b.bit_length() - 1]
                frontier = nxt & allowed & ~seen
                seen |= frontier
            if not seen >> t & 1:
                return Verdict(False, (gens[s], gens[t]))
    return Verdict(True)


def is_polymatroidal(I: MonomialIdeal) -> Verdict:
    """Exchange property over all ordered pairs; witness ``(u, v, i)``."""
    _degree(I)
    gens = I.gens
    gen_set = set(gens)
    n = I.n
    for u in gens:
        for v in gens:
            if u == v:
                continue
            for i in range(n):
                if u[i] <= v[i]:
                    continue
                ok = False
                for j in range(n):
                    if u[j] < v[j]:
                        w = list(u)
                        w[i] -= 1
                        w[j] += 1
                        if tuple(w) in gen_set:
                            ok = True
                            break
                if not ok:
                    return Verdict(False, (u, v, i))
    return Verdict(True)


def is_matroidal(I: MonomialIdeal) -> Verdict:
    _degree(I)
    if not I.is_squarefree():
        bad = next(g for g in I.gens if any(e > 1 for e in g))
        return Verdict(False, ("not squarefree", bad))
    return is_polymatroidal(I)


def _colon_is_linear(prev, u) -> bool:
    """Whether ``(prev) : u`` is generated by variables.

    The colon is generated by ``w / gcd(w, u)`` for ``w`` in ``prev``; it
    is variable-generated iff each of those is divisible by a variable
    that itself occurs as one of them.
    """
    quots = [colon(w, u) for w in prev]
    linear_vars = {q.index(1) for q in quots if sum(q) == 1}
    return all(any(q[i] for i in linear_vars) for q in quots)


def _lex_order(gens):
    return sorted(gens, reverse=True)


def linear_quotient_order(I: MonomialIdeal, order) -> bool:
    """Whether the given ordering of ``G(I)`` has linear quotients."""
    order = list(order)
    return all(_colon_is_linear(order[:j], order[j]) for j in range(1, len(order)))


def has_linear_quotients(I: MonomialIdeal) -> Verdict:
    """Search for an ordering of ``G(I)`` with variable-generated colons.

    Whether a generator may follow a prefix depends only on the set of
    generators in the prefix, so failed prefix sets are memoized.  When
    ``I`` is polymatroidal the decreasing lex order is tried first and must
    succeed.  The witness is the ordering found (``None`` when absent).
    """
    _degree(I)
    gens = list(I.gens)
    m = len(gens)
    lex = _lex_order(gens)
    if linear_quotient_order(I, lex):
        return Verdict(True, tuple(lex))
    if is_polymatroidal(I):
        raise AssertionError(f"polymatroidal ideal {I} fails linear quotients in lex order")
    if m > MAX_LINQUOT_GENS:
        raise CapExceededError("linear quotients search generators", m, MAX_LINQUOT_GENS)
    failed = set()
    order = []

    def rec(used):
        if used == (1 << m) - 1:
            return True
        if used in failed:
            return False
        prev = [gens[t] for t in order]
        for t in range(m):
            if used >> t & 1:
                continue
            if prev and not _colon_is_linear(prev, gens[t]):
                continue
            order.append(t)
            if rec(used | (1 << t)):
                return True
            order.pop()
        failed.add(used)
        return False

    if rec(0):
        return Verdict(True, tuple(gens[t] for t in order))
    return Verdict(False, None)
