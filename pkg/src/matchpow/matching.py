"""Matching powers ``I^[k]`` and the monomial grade ``nu(I)``."""
from __future__ import annotations

from .errors import CapExceededError, ZeroIdealError
from .monomials import MonomialIdeal, _minimal, support_mask

MAX_GRADE_GENS = 64


def _require_nonzero(I):
    if I.is_zero():
        raise ZeroIdealError("operation needs a nonzero ideal")


def generator_matchings(I: MonomialIdeal, k: int) -> list:
    """All ``k``-subsets of ``G(I)`` with pairwise disjoint supports.

    Each matching is a sorted tuple of indices into ``I.gens``; the list is
    in lexicographic order of those tuples.
    """
    _require_nonzero(I)
    if k < 1:
        raise ValueError("k must be positive")
    masks = [support_mask(g) for g in I.gens]
    m = len(masks)
    out = []
    chosen = []

    def rec(start, used):
        if len(chosen) == k:
            out.append(tuple(chosen))
            return
        # not enough generators left to finish
        for t in range(start, m - (k - len(chosen)) + 1):
            if masks[t] & used:
                continue
            chosen.append(t)
            rec(t + 1, used | masks[t])
            chosen.pop()

    rec(0, 0)
    return out


def matching_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """The ``k``-th matching power; the zero ideal when ``k > nu(I)``."""
    _require_nonzero(I)
    if k == 1:
        return I
    gens = I.gens
    products = [tuple(map(sum, zip(*(gens[t] for t in idx)))) for idx in generator_matchings(I, k)]
    # products of valid exponent vectors need no re-validation
    return MonomialIdeal(I.ambient, tuple(_minimal(products)))


def _popcount(x):
    return bin(x).count("1")


def max_set_packing(masks) -> int:
    """Maximum number of pairwise disjoint nonzero bitmasks (exact).

    Branch and bound: branch on the variable covered by the fewest
    remaining sets (either one of those sets is taken, or the variable
    stays uncovered), bounding by ``free variables // smallest set``.
    """
    if any(m == 0 for m in masks):
        # the unit monomial is disjoint from everything, including itself
        # only once since G(I) is a set
        rest = [m for m in masks if m]
        return 1 + max_set_packing(rest)
    uniq = set(masks)
    # A set that strictly contains another is never needed.
    sets = [m for m in uniq if not any(o != m and o & m == o for o in uniq)]
    if not sets:
        return 0

    def greedy(ss):
        used, cnt = 0, 0
        for m in sorted(ss, key=_popcount):
            if not m & used:
                used |= m
                cnt += 1
        return cnt

    best = greedy(sets)

    def rec(ss, count):
        nonlocal best
        if not ss:
            if count > best:
                best = count
            return
        union = 0
        smallest = None
        for m in ss:
            union |= m
            c = _popcount(m)
            if smallest is None or c < smallest:
                smallest = c
        if count + min(len(ss), _popcount(union) // smallest) <= best:
            return
        # variable with fewest covering sets
        bit, cover = None, None
        u = union
        while u:
            b = u & -u
            u ^= b
            c = [m for m in ss if m & b]
            if cover is None or len(c) < len(cover):
                bit, cover = b, c
                if len(c) == 1:
                    break
        for m in cover:
            rec([o for o in ss if not o & m], count + 1)
        rec([o for o in ss if not o & bit], count)

    rec(sets, 0)
    return best


def monomial_grade(I: MonomialIdeal) -> int:
    """``nu(I)``: the largest number of pairwise support-disjoint minimal
    generators.  The zero ideal has grade 0."""
    if I.is_zero():
        return 0
    if len(I.gens) > MAX_GRADE_GENS:
        raise CapExceededError("monomial_grade generators", len(I.gens), MAX_GRADE_GENS)
    return max_set_packing([support_mask(g) for g in I.gens])


def matching_powers(I: MonomialIdeal) -> dict:
    """``{k: I^[k]}`` for ``1 <= k <= nu(I)``."""
    nu = monomial_grade(I)
    return {k: matching_power(I, k) for k in range(1, nu + 1)}
