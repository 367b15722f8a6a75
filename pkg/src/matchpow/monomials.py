"""Monomials as exponent tuples, and monomial ideals by minimal generators.

A monomial over an ambient ring with ``n`` variables is a plain tuple of
``n`` nonnegative ints.  Variable indices are 0-based throughout the API;
the unit monomial is the all-zero tuple.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import AmbientMismatchError, ZeroIdealError

Monomial = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class Ambient:
    """Ordered variable names of a polynomial ring ``K[x_1..x_n]``.

    ``polar_index`` is set on rings produced by :func:`polarize`: entry ``t``
    is the pair ``(i, j)`` meaning variable ``t`` is the ``j``-th copy
    (1-based) of variable ``i`` of the original ring.
    """

    var_names: tuple
    polar_index: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        names = tuple(str(v) for v in self.var_names)
        object.__setattr__(self, "var_names", names)
        if not names:
            raise ValueError("ambient ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")

    @property
    def n(self) -> int:
        return len(self.var_names)

    @classmethod
    def standard(cls, n: int, prefix: str = "x") -> "Ambient":
        return cls(tuple(f"{prefix}{i + 1}" for i in range(n)))

    def index(self, name: str) -> int:
        return self.var_names.index(name)

    def restrict(self, indices: Iterable[int]) -> "Ambient":
        return Ambient(tuple(self.var_names[i] for i in sorted(indices)))

    def unit(self) -> Monomial:
        return (0,) * self.n


def _check_same(u, v):
    if len(u) != len(v):
        raise AmbientMismatchError(f"monomials of length {len(u)} and {len(v)}")


def degree(u: Monomial) -> int:
    return sum(u)


def support(u: Monomial) -> frozenset:
    return frozenset(i for i, e in enumerate(u) if e)


def support_mask(u: Monomial) -> int:
    """Support as a bitmask (bit ``i`` set iff ``x_i`` divides ``u``)."""
    m = 0
    for i, e in enumerate(u):
        if e:
            m |= 1 << i
    return m


def var_degree(u: Monomial, i: int) -> int:
    if not 0 <= i < len(u):
        raise IndexError(f"variable index {i} out of range for n={len(u)}")
    return u[i]


def lcm(u: Monomial, v: Monomial) -> Monomial:
    _check_same(u, v)
    return tuple(a if a > b else b for a, b in zip(u, v))


def gcd(u: Monomial, v: Monomial) -> Monomial:
    _check_same(u, v)
    return tuple(a if a < b else b for a, b in zip(u, v))


def mul(u: Monomial, v: Monomial) -> Monomial:
    _check_same(u, v)
    return tuple(a + b for a, b in zip(u, v))


def divides(u: Monomial, v: Monomial) -> bool:
    _check_same(u, v)
    return all(a <= b for a, b in zip(u, v))


def quotient(v: Monomial, u: Monomial) -> Monomial:
    """``v / u``; requires ``u | v``."""
    if not divides(u, v):
        raise ValueError(f"{u} does not divide {v}")
    return tuple(b - a for a, b in zip(u, v))


def colon(u: Monomial, v: Monomial) -> Monomial:
    """Generator of the principal colon ideal ``(u) : v``, i.e. ``u / gcd(u, v)``."""
    _check_same(u, v)
    return tuple(a - b if a > b else 0 for a, b in zip(u, v))


def support_disjoint(u: Monomial, v: Monomial) -> bool:
    _check_same(u, v)
    return not any(a and b for a, b in zip(u, v))


def canonical_key(u: Monomial):
    """Graded-lex sort key: lower total degree first, then larger exponent
    of the earliest variable first."""
    return (sum(u), tuple(-e for e in u))


def format_monomial(u: Monomial, names: Sequence[str], sep: str = "*") -> str:
    parts = []
    for name, e in zip(names, u):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return sep.join(parts) if parts else "1"


def _minimal(gens: Iterable[Monomial]) -> list:
    uniq = sorted(set(gens), key=canonical_key)
    kept = []
    lower = []  # (mask, monomial) of kept generators of strictly smaller degree
    # Sorted by degree, so a divisor always precedes its multiples, and
    # distinct monomials of equal degree never divide each other.
    deg = None
    batch = []
    for g in uniq:
        d = sum(g)
        if d != deg:
            lower.extend(batch)
            batch = []
            deg = d
        m = support_mask(g)
        if not any(hm & m == hm and all(a <= b for a, b in zip(h, g)) for hm, h in lower):
            kept.append(g)
            batch.append((m, g))
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal stored by its minimal generators in canonical order.

    Build one with :func:`minimize_generators` (or :meth:`from_gens`); the
    constructor trusts that ``gens`` is already minimal and sorted.
    """

    ambient: Ambient
    gens: tuple

    @classmethod
    def from_gens(cls, ambient: Ambient, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return minimize_generators(ambient, gens)

    @property
    def n(self) -> int:
        return self.ambient.n

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gens == (self.ambient.unit(),)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def contains(self, u: Monomial) -> bool:
        """Ideal membership of the monomial ``u``."""
        return any(divides(g, u) for g in self.gens)

    def support(self) -> frozenset:
        s = set()
        for g in self.gens:
            s |= support(g)
        return frozenset(s)

    def is_fully_supported(self) -> bool:
        return len(self.support()) == self.n

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def degrees(self) -> list:
        return [sum(g) for g in self.gens]

    def with_support_ambient(self) -> "MonomialIdeal":
        """Drop variables that divide no generator."""
        keep = sorted(self.support())
        amb = self.ambient.restrict(keep)
        return MonomialIdeal(amb, tuple(tuple(g[i] for i in keep) for g in self.gens))

    def to_strings(self) -> list:
        return [format_monomial(g, self.ambient.var_names) for g in self.gens]

    def __str__(self):
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(self.to_strings()) + ")"


def minimize_generators(ambient: Ambient, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Minimal generating set of the ideal generated by ``gens``.

    Duplicates and non-minimal monomials are removed and the result sorted
    canonically.  An empty list yields the zero ideal.
    """
    tgens = []
    for g in gens:
        g = tuple(int(e) for e in g)
        if len(g) != ambient.n:
            raise AmbientMismatchError(f"generator {g} has length {len(g)}, ambient has n={ambient.n}")
        if any(e < 0 for e in g):
            raise ValueError(f"negative exponent in {g}")
        tgens.append(g)
    return MonomialIdeal(ambient, tuple(_minimal(tgens)))


def _require_nonzero(I: MonomialIdeal):
    if I.is_zero():
        raise ZeroIdealError("operation needs a nonzero ideal")


def initial_degree(I: MonomialIdeal) -> int:
    _require_nonzero(I)
    return min(sum(g) for g in I.gens)


def bounding_multidegree(I: MonomialIdeal) -> tuple:
    _require_nonzero(I)
    return tuple(max(col) for col in zip(*I.gens))


def radical(I: MonomialIdeal) -> MonomialIdeal:
    _require_nonzero(I)
    return minimize_generators(I.ambient, (tuple(1 if e else 0 for e in g) for g in I.gens))


def polarize(I: MonomialIdeal, bound: Sequence[int] | None = None) -> MonomialIdeal:
    """Polarization of ``I``.

    The result lives in the ring with variables ``x_{i,j}`` for
    ``1 <= j <= bound[i]``, ordered by ``(i, j)``; ``bound`` defaults to the
    bounding multidegree of ``I``.  Passing a larger ``bound`` embeds the
    polarization into a bigger polarized ring, which is how ``(I^[k])^pol``
    is compared with ``(I^pol)^[k]``.
    """
    _require_nonzero(I)
    deg = bounding_multidegree(I)
    if bound is None:
        bound = deg
    bound = tuple(bound)
    if len(bound) != I.n or any(b < d for b, d in zip(bound, deg)):
        raise ValueError(f"bound {bound} does not dominate deg(I) = {deg}")
    index = tuple((i, j) for i in range(I.n) for j in range(1, bound[i] + 1))
    if not index:
        # whole ring: polarize into a one-variable ring
        return MonomialIdeal(Ambient(("x_{1,1}",)), ((0,),))
    names = tuple(f"x_{{{i + 1},{j}}}" for i, j in index)
    amb = Ambient(names, polar_index=index)
    gens = [tuple(1 if j <= g[i] else 0 for i, j in index) for g in I.gens]
    # Polarization of a minimal set stays minimal; just re-sort.
    return MonomialIdeal(amb, tuple(sorted(gens, key=canonical_key)))


def depolarize(J: MonomialIdeal, original: Ambient) -> MonomialIdeal:
    """Substitute ``x_{i,j} -> x_i`` in a polarized ideal."""
    index = J.ambient.polar_index
    if index is None:
        raise ValueError("ideal does not live in a polarized ring")
    gens = []
    for g in J.gens:
        u = [0] * original.n
        for t, e in enumerate(g):
            u[index[t][0]] += e
        gens.append(tuple(u))
    return minimize_generators(original, gens)


def localize(I: MonomialIdeal, P: Iterable[int]) -> MonomialIdeal:
    """Monomial localization at the prime generated by the variables in ``P``.

    Variables outside ``P`` are set to 1 and the result lives in the ring
    on the variables of ``P`` (kept in ambient order).
    """
    _require_nonzero(I)
    keep = sorted(set(P))
    if not keep:
        raise ValueError("localization needs at least one variable")
    if keep[0] < 0 or keep[-1] >= I.n:
        raise IndexError(f"variable subset {keep} out of range for n={I.n}")
    amb = I.ambient.restrict(keep)
    return minimize_generators(amb, (tuple(g[i] for i in keep) for g in I.gens))


def same_ideal_by_names(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """Equality of ideals whose rings have the same variable names, possibly
    in a different order."""
    if set(I.ambient.var_names) != set(J.ambient.var_names):
        return False
    perm = [J.ambient.index(name) for name in I.ambient.var_names]
    regens = {tuple(g[p] for p in perm) for g in J.gens}
    return regens == set(I.gens)
