"""Betti numbers of monomial ideals and the invariants derived from them.

``beta_{i,a}(I)`` is the dimension of ``H~_{i-1}`` of the upper Koszul
simplicial complex ``K^a(I) = {w subset of supp(a) : x^(a-w) in I}``.  It
can only be nonzero when ``a`` is the lcm of some generators, so the
engine walks the lcm lattice of ``G(I)``.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .errors import CapExceededError, NotFullySupportedError, ZeroIdealError
from .linalg import QQ, CoefficientField, rank
from .matching import matching_power, monomial_grade
from .monomials import MonomialIdeal, bounding_multidegree, initial_degree

DEFAULT_MAX_GENS = 20


# -- simplicial complexes -------------------------------------------------

def _submasks(f):
    s = f
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & f


def _popcount(x):
    return bin(x).count("1")


@dataclass(frozen=True)
class SimplicialComplex:
    """A finite simplicial complex on ``ground`` with faces as bitmasks.

    Bit ``t`` of a face refers to ``ground[t]``.  The void complex has no
    faces at all; the irrelevant complex is ``{empty face}``.
    """

    ground: tuple
    faces: frozenset

    @classmethod
    def from_facets(cls, ground, facets: Iterable[int]) -> "SimplicialComplex":
        faces = set()
        for f in facets:
            if f in faces:
                continue
            faces.update(_submasks(f))
        return cls(tuple(ground), frozenset(faces))

    @classmethod
    def from_sets(cls, ground, sets) -> "SimplicialComplex":
        pos = {v: t for t, v in enumerate(ground)}
        facets = []
        for s in sets:
            m = 0
            for v in s:
                m |= 1 << pos[v]
            facets.append(m)
        return cls.from_facets(ground, facets)

    def is_void(self) -> bool:
        return not self.faces

    def is_closed(self) -> bool:
        """Closed under taking subsets."""
        return all(f & ~(1 << b) in self.faces for f in self.faces for b in range(len(self.ground)) if f >> b & 1)

    @property
    def dimension(self) -> int:
        if not self.faces:
            return -2
        return max(_popcount(f) for f in self.faces) - 1

    def face_sets(self) -> list:
        return sorted(
            (frozenset(self.ground[t] for t in range(len(self.ground)) if f >> t & 1) for f in self.faces),
            key=lambda s: (len(s), sorted(map(str, s))),
        )


_SCREEN = CoefficientField(2_147_483_647)


def _homology_from_faces(faces, field: CoefficientField) -> list:
    if not faces:
        return []
    by_dim = defaultdict(list)
    for f in faces:
        by_dim[_popcount(f) - 1].append(f)
    top = max(by_dim)
    index = {}
    for d in range(-1, top + 1):
        by_dim[d].sort()
        for t, f in enumerate(by_dim[d]):
            index[f] = t
    # boundary d: C_d -> C_{d-1}, for d = 0..top, rows indexed by d-faces
    boundary = {}
    for d in range(0, top + 1):
        rows = []
        for f in by_dim[d]:
            row = {}
            sign = 1
            bits = f
            while bits:
                b = bits & -bits
                bits ^= b
                row[index[f ^ b]] = sign
                sign = -sign
            rows.append(row)
        boundary[d] = rows

    def dims_from(ranks):
        return [len(by_dim[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0) for d in range(-1, top + 1)]

    if field.p:
        return dims_from({d: rank(rows, field) for d, rows in boundary.items()})
    # Over QQ: an integer matrix has rank over QQ at least its rank mod p, so
    # rational homology is bounded by mod-p homology.  Exact ranks are only
    # needed next to degrees where the mod-p homology is nonzero.
    ranks = {d: rank(rows, _SCREEN) for d, rows in boundary.items()}
    dims = dims_from(ranks)
    exact = {d for t, h in enumerate(dims) if h for d in (t - 1, t) if d in boundary}
    for d in exact:
        ranks[d] = rank(boundary[d], field)
    refined = dims_from(ranks)
    return [h and refined[t] for t, h in enumerate(dims)]


def reduced_homology_dims(complex_: SimplicialComplex, field: CoefficientField = QQ) -> list:
    """Dimensions of reduced homology; entry ``d + 1`` is ``dim H~_d``.

    The void complex returns an empty list (all homology zero); the
    irrelevant complex returns ``[1]``.
    """
    return _homology_from_faces(complex_.faces, field)


def _nerve_faces(facets):
    faces = {0}
    m = len(facets)

    def rec(start, chosen, inter):
        for t in range(start, m):
            x = inter & facets[t]
            if x:
                s = chosen | (1 << t)
                faces.add(s)
                rec(t + 1, s, x)

    rec(0, 0, -1)
    return faces


@lru_cache(maxsize=200_000)
def _facet_homology(facets: tuple, field: CoefficientField) -> tuple:
    """Reduced homology of the complex generated by nonempty, pairwise
    incomparable ``facets``.

    Uses whichever of the complex itself or the nerve of its facet cover
    (homotopy equivalent, since all intersections are simplices) has fewer
    faces.
    """
    common = -1
    for f in facets:
        common &= f
    if common:
        return ()  # a cone over any common vertex is acyclic
    full_cost = sum(1 << _popcount(f) for f in facets)
    if (1 << len(facets)) < full_cost:
        faces = _nerve_faces(facets)
    else:
        faces = set()
        for f in facets:
            faces.update(_submasks(f))
    return tuple(_homology_from_faces(faces, field))


# -- upper Koszul complexes and Betti tables ------------------------------

def upper_koszul_complex(I: MonomialIdeal, a) -> SimplicialComplex:
    """``K^a(I)`` on ground set ``supp(a)`` (variable indices)."""
    a = tuple(a)
    if len(a) != I.n or any(e < 0 for e in a):
        raise ValueError(f"bad multidegree {a}")
    supp = [i for i, e in enumerate(a) if e]
    facets = []
    for g in I.gens:
        if all(x <= y for x, y in zip(g, a)):
            m = 0
            for t, i in enumerate(supp):
                if a[i] > g[i]:
                    m |= 1 << t
            facets.append(m)
    return SimplicialComplex.from_facets(supp, facets)


def lcm_lattice(gens) -> set:
    """All lcms of nonempty subsets of ``gens``."""
    gens = list(gens)
    seen = set(gens)
    frontier = list(seen)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = tuple(p if p > q else q for p, q in zip(x, g))
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return seen


def _maximal(masks):
    uniq = sorted(set(masks), key=_popcount, reverse=True)
    out = []
    for m in uniq:
        if not any(m & o == m for o in out):
            out.append(m)
    return out


def _betti_at(a, gens, gen_set, field):
    """``{i: beta_{i,a}}`` (nonzero entries only)."""
    if a in gen_set:
        return {0: 1}
    facets = []
    for g in gens:
        if all(x <= y for x, y in zip(g, a)):
            m = 0
            for i, (x, y) in enumerate(zip(g, a)):
                if y > x:
                    m |= 1 << i
            facets.append(m)
    facets = _maximal(facets)
    if len(facets) <= 1:
        return {}
    dims = _facet_homology(tuple(sorted(facets)), field)
    # dims[d + 1] = H~_d ; beta_i = H~_{i-1} = dims[i]
    return {i: h for i, h in enumerate(dims) if h}


@dataclass(frozen=True)
class BettiTable:
    """Multigraded and graded Betti numbers of an ideal (not the quotient)."""

    multigraded: dict
    graded: dict
    field: CoefficientField = QQ
    n: int = 0

    def totals(self) -> dict:
        out = defaultdict(int)
        for (i, _), v in self.graded.items():
            out[i] += v
        return dict(sorted(out.items()))

    def total(self, i: int) -> int:
        return self.totals().get(i, 0)

    def beta(self, i: int, j: int) -> int:
        return self.graded.get((i, j), 0)

    def beta_multi(self, i: int, a) -> int:
        return self.multigraded.get((i, tuple(a)), 0)

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.graded)

    @property
    def reg(self) -> int:
        return max(j - i for i, j in self.graded)

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * v for i, v in self.totals().items())

    def diagram(self) -> str:
        """Macaulay-style Betti diagram: row ``r`` holds ``beta_{i, i+r}``."""
        if not self.graded:
            return "no results (zero ideal)"
        cols = range(0, self.pd + 1)
        rows = sorted({j - i for i, j in self.graded})
        width = max(len(str(v)) for v in self.graded.values())
        width = max(width, len(str(self.pd)))
        lines = ["       " + " ".join(str(i).rjust(width) for i in cols)]
        lines.append("total: " + " ".join(str(self.total(i)).rjust(width) for i in cols))
        for r in rows:
            cells = []
            for i in cols:
                v = self.graded.get((i, i + r), 0)
                cells.append((str(v) if v else "-").rjust(width))
            lines.append(f"{r:>5}: " + " ".join(cells))
        return "\n".join(lines)

    def listing(self) -> str:
        """One line ``i: beta @ degree j`` per nonzero graded Betti number."""
        if not self.graded:
            return "no results (zero ideal)"
        return "\n".join(f"{i}: {v} @ degree {j}" for (i, j), v in sorted(self.graded.items()))

    def csv_rows(self) -> list:
        """Rows = homological index, columns = total degree."""
        if not self.graded:
            return [["i"]]
        degs = sorted({j for _, j in self.graded})
        out = [["i"] + [str(j) for j in degs]]
        for i in range(self.pd + 1):
            out.append([str(i)] + [str(self.graded.get((i, j), 0)) for j in degs])
        return out


_TABLE_CACHE: dict = {}
_TABLE_CACHE_SIZE = 4096


def _multigraded(gens: tuple, field: CoefficientField) -> dict:
    key = (gens, field)
    table = _TABLE_CACHE.get(key)
    if table is None:
        gen_set = set(gens)
        table = {}
        for a in sorted(lcm_lattice(gens), key=lambda a: (sum(a), a)):
            for i, h in _betti_at(a, gens, gen_set, field).items():
                table[(i, a)] = h
        if len(_TABLE_CACHE) >= _TABLE_CACHE_SIZE:
            _TABLE_CACHE.clear()
        _TABLE_CACHE[key] = table
    return table


def _check_cap(I, max_gens):
    if I.is_zero():
        raise ZeroIdealError("Betti numbers need a nonzero ideal")
    if max_gens is not None and len(I.gens) > max_gens:
        raise CapExceededError("Betti computation generators", len(I.gens), max_gens)


def multigraded_betti(I: MonomialIdeal, field: CoefficientField = QQ, max_gens: int | None = DEFAULT_MAX_GENS) -> BettiTable:
    _check_cap(I, max_gens)
    multi = _multigraded(I.gens, field)
    graded = defaultdict(int)
    for (i, a), v in multi.items():
        graded[(i, sum(a))] += v
    return BettiTable(dict(multi), dict(sorted(graded.items())), field, I.n)


def graded_betti(I: MonomialIdeal, field: CoefficientField = QQ, max_gens: int | None = DEFAULT_MAX_GENS) -> dict:
    return multigraded_betti(I, field, max_gens).graded


@dataclass(frozen=True)
class HomologicalInvariants:
    pd_ideal: int
    pd_quotient: int
    depth_quotient: int
    reg_ideal: int
    indeg: int


def homological_invariants(I: MonomialIdeal, field: CoefficientField = QQ, max_gens: int | None = DEFAULT_MAX_GENS) -> HomologicalInvariants:
    if I.is_unit():
        raise ValueError("homological invariants need a proper ideal")
    table = multigraded_betti(I, field, max_gens)
    pd = table.pd
    return HomologicalInvariants(
        pd_ideal=pd,
        pd_quotient=pd + 1,
        depth_quotient=I.n - pd - 1,
        reg_ideal=table.reg,
        indeg=initial_degree(I),
    )


@dataclass(frozen=True)
class NormalizedDepthProfile:
    """``g_I(k)`` for ``1 <= k <= nu(I)``.

    ``values`` comes from the depth form of the definition and
    ``values_pd`` from the equivalent ``|deg(I)| - pd(I^[k]) - indeg(I^[k])``;
    the constructor of the profile checks they agree.
    """

    values: dict
    values_pd: dict = field(default_factory=dict)
    depths: dict = field(default_factory=dict)

    def __getitem__(self, k):
        return self.values[k]

    def is_nonincreasing(self) -> bool:
        ks = sorted(self.values)
        return all(self.values[a] >= self.values[b] for a, b in zip(ks, ks[1:]))


def normalized_depth(I: MonomialIdeal, field: CoefficientField = QQ, max_gens: int | None = DEFAULT_MAX_GENS) -> NormalizedDepthProfile:
    if I.is_zero():
        raise ZeroIdealError("normalized depth needs a nonzero ideal")
    if not I.is_fully_supported():
        missing = sorted(set(range(I.n)) - I.support())
        raise NotFullySupportedError(
            f"variables {[I.ambient.var_names[i] for i in missing]} divide no generator"
        )
    n = I.n
    deg_total = sum(bounding_multidegree(I))
    values, values_pd, depths = {}, {}, {}
    for k in range(1, monomial_grade(I) + 1):
        J = matching_power(I, k)
        inv = homological_invariants(J, field, max_gens)
        values[k] = inv.depth_quotient + deg_total - n - (inv.indeg - 1)
        values_pd[k] = deg_total - inv.pd_ideal - inv.indeg
        depths[k] = inv.depth_quotient
        if values[k] != values_pd[k]:
            raise AssertionError(f"g_I({k}) forms disagree: {values[k]} vs {values_pd[k]}")
    return NormalizedDepthProfile(values, values_pd, depths)


def single_degree(I: MonomialIdeal):
    """Common total degree of the generators, or ``None`` if mixed."""
    if I.is_zero():
        raise ZeroIdealError("single_degree needs a nonzero ideal")
    degs = {sum(g) for g in I.gens}
    return degs.pop() if len(degs) == 1 else None


def has_linear_resolution(I: MonomialIdeal, field: CoefficientField = QQ, max_gens: int | None = DEFAULT_MAX_GENS) -> bool:
    """True iff ``I`` is generated in one degree ``d`` and
    ``beta_{i,j}(I) = 0`` unless ``j = d + i``.

    Walks the lcm lattice by increasing degree and stops at the first
    nonlinear Betti number.
    """
    _check_cap(I, max_gens)
    d = single_degree(I)
    if d is None:
        return False
    gens = I.gens
    table = _TABLE_CACHE.get((gens, field))
    if table is not None:
        return all(sum(a) == d + i for (i, a) in table)
    gen_set = set(gens)
    for a in sorted(lcm_lattice(gens), key=lambda a: (sum(a), a)):
        for i in _betti_at(a, gens, gen_set, field):
            if sum(a) != d + i:
                return False
    return True
