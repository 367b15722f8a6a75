"""Instance checks of the theory of matching powers, plus family scans.

Each check produces a :class:`CheckReport` that carries the serialized
instance, so any verdict can be replayed from the report alone.  Check ids
are split into proven statements (a violation means a bug), conjectures
and open questions (reported on a warning channel), and worked examples.
"""
from __future__ import annotations

import itertools
import json
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

import networkx as nx

from .betti import (
    has_linear_resolution,
    homological_invariants,
    multigraded_betti,
    normalized_depth,
    single_degree,
)
from .errors import CapExceededError
from .formats import graph_to_json_obj, ideal_to_json_obj
from .graphs import (
    SimpleGraph,
    WeightedOrientedGraph,
    at_most_one_perfect_matching_everywhere,
    block_structure,
    edge_ideal,
    has_even_cycle,
    induced_matching_number,
    induced_subgraph,
    longest_induced_path,
    matching_number,
    oriented_edge_ideal,
    path_graph,
    repair_weights,
    validate_weights,
    weighted_induced_matching_number,
)
from .linalg import QQ, CoefficientField
from .matching import matching_power, monomial_grade
from .monomials import (
    Ambient,
    MonomialIdeal,
    bounding_multidegree,
    initial_degree,
    minimize_generators,
    polarize,
    radical,
    same_ideal_by_names,
    support,
)
from .structure import has_linear_quotients, is_linearly_related, is_polymatroidal, MAX_LINQUOT_GENS

HOLDS = "holds"
VIOLATED = "violated"
NOT_MET = "hypothesis-not-met"

CONJECTURE_CHECKS = frozenset({"g-nonincreasing", "question-linrel-linres"})


@dataclass
class CheckReport:
    check_id: str
    instance: dict
    verdict: str
    witness: dict = field(default_factory=dict)
    seconds: float = 0.0
    flagged: bool = False  # value differs from the one printed in the source; not a failure
    note: str = ""

    @property
    def is_conjecture(self) -> bool:
        return self.check_id in CONJECTURE_CHECKS

    @property
    def is_failure(self) -> bool:
        return self.verdict == VIOLATED and not self.is_conjecture

    @property
    def is_warning(self) -> bool:
        return self.flagged or (self.verdict == VIOLATED and self.is_conjecture)

    def to_json_obj(self) -> dict:
        return {
            "schema": 1,
            "check_id": self.check_id,
            "instance": self.instance,
            "verdict": self.verdict,
            "witness": self.witness,
            "seconds": round(self.seconds, 6),
            "flagged": self.flagged,
            "note": self.note,
        }


def _ideal_instance(I, k=None):
    obj = {"ideal": ideal_to_json_obj(I)}
    if k is not None:
        obj["k"] = k
    return obj


def _graph_instance(D, k=None):
    obj = {"graph": graph_to_json_obj(D)}
    if k is not None:
        obj["k"] = k
    return obj


class _Recorder:
    """Collects reports and times each check."""

    def __init__(self, instance):
        self.instance = instance
        self.reports = []
        self._t = time.perf_counter()

    def add(self, check_id, ok, witness=None, instance=None, note="", flagged=False):
        if ok is None:
            verdict = NOT_MET
        else:
            verdict = HOLDS if ok else VIOLATED
        now = time.perf_counter()
        self.reports.append(
            CheckReport(
                check_id,
                instance if instance is not None else self.instance,
                verdict,
                _jsonable(witness or {}),
                now - self._t,
                flagged,
                note,
            )
        )
        self._t = now


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [_jsonable(v) for v in x]
        return sorted(items, key=str) if isinstance(x, (set, frozenset)) else items
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return str(x)


def _g_direct(J_inv, deg_total, n):
    return J_inv.depth_quotient + deg_total - n - (J_inv.indeg - 1)


@lru_cache(maxsize=256)
def _graph_facts(G: SimpleGraph):
    """``(nu(G), has an even cycle, I(G))``, shared by all orientations of ``G``."""
    return matching_number(G), has_even_cycle(G), edge_ideal(G)


def linearly_related(I: MonomialIdeal) -> bool:
    return bool(is_linearly_related(I))


def is_edge_ideal(I: MonomialIdeal) -> bool:
    return I.is_squarefree() and all(sum(g) == 2 for g in I.gens)


# -- monomial ideals -----------------------------------------------------------

def verify_core(I: MonomialIdeal, field: CoefficientField = QQ, max_gens: int = 20) -> list:
    """Depth bound, nonnegativity of ``g_I``, polarization identities and,
    for quadratic ideals, the statements about the last matching power."""
    inst = _ideal_instance(I)
    rec = _Recorder(inst)
    if I.is_zero() or not I.is_fully_supported():
        rec.add("core-input", None, note="needs a nonzero fully supported ideal")
        return rec.reports
    n = I.n
    deg_total = sum(bounding_multidegree(I))
    nu = monomial_grade(I)
    P = polarize(I)
    deg_vec = bounding_multidegree(I)
    rec.add("polar-grade", monomial_grade(P) == nu, {"nu": nu, "nu_pol": monomial_grade(P)})
    g_vals = {}
    for k in range(1, nu + 1):
        kinst = _ideal_instance(I, k)
        J = matching_power(I, k)
        PJ = matching_power(P, k)
        JP = polarize(J, bound=deg_vec)
        rec.add("polar-power", JP.gens == PJ.gens or same_ideal_by_names(JP, PJ), instance=kinst)
        try:
            inv = homological_invariants(J, field, max_gens)
            inv_p = homological_invariants(PJ, field, max_gens)
            bJ = multigraded_betti(J, field, max_gens)
            bP = multigraded_betti(PJ, field, max_gens)
        except CapExceededError as exc:
            rec.add("core-betti", None, {"error": str(exc)}, instance=kinst)
            continue
        # pd(J) <= |deg(J)| - indeg(J)
        rec.add(
            "pd-shift-bound",
            inv.pd_ideal <= sum(bounding_multidegree(J)) - inv.indeg,
            {"pd": inv.pd_ideal, "deg": sum(bounding_multidegree(J)), "indeg": inv.indeg},
            instance=kinst,
        )
        bound = inv.indeg - 1 + (n - deg_total)
        rec.add("depth-bound", inv.depth_quotient >= bound, {"depth": inv.depth_quotient, "bound": bound}, instance=kinst)
        g = _g_direct(inv, deg_total, n)
        g_pd = deg_total - inv.pd_ideal - inv.indeg
        g_vals[k] = g
        rec.add("g-forms-agree", g == g_pd, {"g": g, "g_pd": g_pd}, instance=kinst)
        rec.add("g-nonneg", g >= 0, {"g": g}, instance=kinst)
        g_p = _g_direct(inv_p, deg_total, P.n)
        rec.add("polar-g", g == g_p, {"g": g, "g_pol": g_p}, instance=kinst)
        rec.add(
            "polar-depth",
            inv.depth_quotient == inv_p.depth_quotient - deg_total + n,
            {"depth": inv.depth_quotient, "depth_pol": inv_p.depth_quotient, "deg": deg_total, "n": n},
            instance=kinst,
        )
        rec.add("polar-betti", bJ.graded == bP.graded, {"betti": bJ.graded, "betti_pol": bP.graded}, instance=kinst)
        if single_degree(J) is not None:
            rec.reports.extend(_structure_checks(J, field, max_gens, kinst, table=bJ))
            if is_polymatroidal(PJ):
                rec.add("polar-polymatroidal-lemma", bool(is_polymatroidal(J)), instance=kinst)
    if all(len(support(g)) == 2 for g in I.gens):
        for k in range(1, nu):
            J1 = matching_power(I, k + 1)
            supps = [support(g) for g in J1.gens]
            if not linearly_related(matching_power(I, k)) or len(set(supps)) != len(supps):
                continue
            rec.add("consecutive-powers", linearly_related(J1), {"k": k}, instance=_ideal_instance(I, k))
    if is_edge_ideal(I) and len(g_vals) > 1:
        ks = sorted(g_vals)
        bad = [k for k in ks[:-1] if g_vals[k + 1] > g_vals[k]]
        rec.add("g-nonincreasing", not bad, {"g": g_vals, "increase_at": bad})
    if single_degree(I) == 2:
        top = matching_power(I, nu)
        rec.add("quadratic-last-polymatroidal", bool(is_polymatroidal(top)), {"nu": nu}, instance=_ideal_instance(I, nu))
        if nu in g_vals:
            rec.add("quadratic-g-last", g_vals[nu] == 0, {"g": g_vals[nu]}, instance=_ideal_instance(I, nu))
            reg = homological_invariants(top, field, max_gens).reg_ideal
            rec.add("quadratic-last-reg", reg == 2 * nu, {"reg": reg, "nu": nu}, instance=_ideal_instance(I, nu))
    return rec.reports


def _structure_checks(J, field, max_gens, inst, table=None):
    """Criterion vs Betti cross-check and the implication chain
    polymatroidal => linear quotients => linear resolution => linearly related."""
    rec = _Recorder(inst)
    d = single_degree(J)
    if table is None:
        table = multigraded_betti(J, field, max_gens)
    linrel = is_linearly_related(J)
    nonlinear_first = sorted({j for (i, j) in table.graded if i == 1 and j != d + 1})
    rec.add("linrel-betti", bool(linrel) == (not nonlinear_first),
            {"linrel": bool(linrel), "nonlinear_beta1_degrees": nonlinear_first, "pair": linrel.witness})
    polym = is_polymatroidal(J)
    linres = all(j == d + i for (i, j) in table.graded)
    if len(J.gens) <= MAX_LINQUOT_GENS or polym:
        linquot = has_linear_quotients(J)
        chain = [bool(polym), bool(linquot), linres, bool(linrel)]
        ok = all(not a or b for a, b in zip(chain, chain[1:]))
        rec.add("implication-chain", ok, {"polymatroidal": chain[0], "linquot": chain[1], "linres": chain[2], "linrel": chain[3]})
    else:
        ok = (not polym or linres) and (not linres or bool(linrel))
        rec.add("implication-chain", ok, {"polymatroidal": bool(polym), "linres": linres, "linrel": bool(linrel),
                                          "linquot": "skipped (too many generators)"})
    return rec.reports


# -- weighted oriented graphs ------------------------------------------------

def _embed_ideal_table(table, src_names, dst_names):
    pos = {name: t for t, name in enumerate(dst_names)}
    out = {}
    for (i, a), v in table.multigraded.items():
        b = [0] * len(dst_names)
        for name, e in zip(src_names, a):
            b[pos[name]] = e
        out[(i, tuple(b))] = v
    return out


def _ideal_unchecked(D: WeightedOrientedGraph) -> MonomialIdeal:
    """``I(D)`` without the source-weight convention (source weights never
    appear as exponents, so the ideal does not depend on them)."""
    return oriented_edge_ideal(repair_weights(D))


def path_pd_bound(ell: int, k: int):
    """Lower bound for ``pd(I(D)^[k])`` from an induced path on ``ell``
    vertices, or ``None`` outside ``1 <= k <= floor(ell/2)``."""
    c = -(-ell // 3)
    if 1 <= k <= c:
        return ell - c - k
    if c + 1 <= k <= ell // 2:
        return ell - 2 * k
    return None


def verify_graph(D: WeightedOrientedGraph, k: int, field: CoefficientField = QQ, max_gens: int = 20,
                 subsets: int = 3, seed: int = 0) -> list:
    """Comparison of ``I(D)^[k]`` with ``I(G)^[k]``, the restriction lemma on
    sampled induced subgraphs, and the regularity / pd lower bounds."""
    inst = _graph_instance(D, k)
    rec = _Recorder(inst)
    bad = validate_weights(D)
    G = D.underlying()
    nuG = matching_number(G)
    if bad or not 1 <= k <= nuG:
        rec.add("graph-input", None, {"bad_sources": bad, "nu": nuG}, note="needs valid weights and 1 <= k <= nu(G)")
        return rec.reports
    ID = oriented_edge_ideal(D)
    IG = edge_ideal(G)
    n = len(D.vertices)
    nuD, nuIG = monomial_grade(ID), monomial_grade(IG)
    rec.add("cmp-a-nu", nuD == nuIG == nuG, {"nu_ID": nuD, "nu_IG": nuIG, "nu_G": nuG})
    JD, JG = matching_power(ID, k), matching_power(IG, k)
    rec.add("radical-power", radical(JD) == JG, {"radical": str(radical(JD)), "IGk": str(JG)})
    try:
        bD = multigraded_betti(JD, field, max_gens)
        bG = multigraded_betti(JG, field, max_gens)
    except CapExceededError as exc:
        rec.add("graph-betti", None, {"error": str(exc)})
        return rec.reports
    rec.add("cmp-b-pd", bG.pd <= bD.pd, {"pd_IG": bG.pd, "pd_ID": bD.pd})
    rec.add("cmp-c-reg", bG.reg <= bD.reg, {"reg_IG": bG.reg, "reg_ID": bD.reg})
    tD, tG = bD.totals(), bG.totals()
    rec.add("cmp-d-betti", all(tG.get(i, 0) <= tD.get(i, 0) for i in set(tD) | set(tG)), {"beta_IG": tG, "beta_ID": tD})
    wsum = sum(D.weights.values())
    gD = sum(bounding_multidegree(ID)) - bD.pd - initial_degree(JD)
    gG = sum(bounding_multidegree(IG)) - bG.pd - initial_degree(JG)
    rec.add("cmp-e-g", gD <= gG + wsum - n, {"g_ID": gD, "g_IG": gG, "weight_sum": wsum, "n": n})
    rec.add("deg-is-weights", sum(bounding_multidegree(ID)) == wsum, {"deg": sum(bounding_multidegree(ID)), "weights": wsum})
    if single_degree(JD) is not None:
        rec.reports.extend(_structure_checks(JD, field, max_gens, inst, table=bD))

    # restriction lemma on sampled induced subgraphs
    rng = random.Random(f"{seed}:{k}:{json.dumps(graph_to_json_obj(D), sort_keys=True)}")
    verts = list(D.vertices)
    names = ID.ambient.var_names
    for _ in range(subsets):
        W = [v for v in verts if rng.random() < 0.7]
        Dp = induced_subgraph(D, W)
        if not Dp.arcs:
            continue
        Ip = _ideal_unchecked(Dp)
        if monomial_grade(Ip) < k:
            continue
        Jp = matching_power(Ip, k)
        sub = {"W": W}
        try:
            bp = multigraded_betti(Jp, field, max_gens)
        except CapExceededError as exc:
            rec.add("restriction-betti", None, {"error": str(exc), **sub})
            continue
        emb = _embed_ideal_table(bp, Jp.ambient.var_names, names)
        worse = [(i, a) for (i, a), v in emb.items() if v > bD.multigraded.get((i, a), 0)]
        rec.add("restriction-betti", not worse, {**sub, "exceeding": worse[:5]})
        rec.add("restriction-reg", bp.reg <= bD.reg, {**sub, "reg_sub": bp.reg, "reg": bD.reg})

    im = induced_matching_number(G)
    wim = weighted_induced_matching_number(D)
    rec.add("wim-ge-im", wim >= im and (wim == im or any(w > 1 for w in D.weights.values())), {"wim": wim, "im": im})
    if k <= im:
        rec.add("reg-wim-bound", bD.reg >= wim + k, {"reg": bD.reg, "wim": wim, "k": k})
    else:
        rec.add("reg-wim-bound", None, {"im": im, "k": k})
    ell = longest_induced_path(G) + 1  # vertices on a longest induced path
    rec.add("nu-path-bound", nuD >= ell // 2, {"nu": nuD, "ell": ell})
    b = path_pd_bound(ell, k)
    if b is None:
        rec.add("pd-path-bound", None, {"ell": ell, "k": k})
    else:
        rec.add("pd-path-bound", bD.pd >= b, {"pd": bD.pd, "bound": b, "ell": ell})
    return rec.reports


def verify_linearity(D: WeightedOrientedGraph, k: int, field: CoefficientField = QQ, max_gens: int = 20) -> list:
    """Linearly related matching powers of ``I(D)`` for graphs without even
    cycles: distinct supports, only the last power, and the three-way
    characterization.  Hypotheses are detected first."""
    inst = _graph_instance(D, k)
    rec = _Recorder(inst)
    nuG, even, IG = _graph_facts(D.underlying())
    if validate_weights(D) or not 1 <= k <= nuG:
        rec.add("linearity-input", None, note="needs valid weights and 1 <= k <= nu(G)")
        return rec.reports
    ID = oriented_edge_ideal(D)
    no_even = not even
    differs = ID != IG
    J = matching_power(ID, k)
    linrel = linearly_related(J)
    hyp = {"no_even_cycle": no_even, "ID_differs_from_IG": differs, "linrel": bool(linrel)}

    if no_even:
        by_supp = {}
        clash = None
        for g in J.gens:
            s = support(g)
            if s in by_supp and by_supp[s] != g:
                clash = (by_supp[s], g)
                break
            by_supp[s] = g
        rec.add("distinct-support", clash is None, {"clash": clash})
    else:
        rec.add("distinct-support", None, hyp)

    need_linres = no_even and differs
    linres = None
    polym = single_degree(J) is not None and bool(is_polymatroidal(J))
    try:
        linres = has_linear_resolution(J, field, max_gens)
    except CapExceededError as exc:
        hyp["linres_error"] = str(exc)
    hyp.update(polymatroidal=polym, linres=linres)
    if need_linres:
        rec.add("linrel-only-last", (not linrel) or k == nuG, {**hyp, "nu": nuG})
        if linres is None:
            rec.add("characterization", None, hyp)
        else:
            rec.add("characterization", bool(linrel) == polym == linres, hyp)
    else:
        rec.add("linrel-only-last", None, hyp)
        rec.add("characterization", None, hyp)

    # consecutive powers: supports of size 2 always hold for I(D)
    if k < nuG and linrel:
        J1 = matching_power(ID, k + 1)
        supps = [support(g) for g in J1.gens]
        if len(set(supps)) == len(supps):
            rec.add("consecutive-powers", linearly_related(J1), {"k": k})
        else:
            rec.add("consecutive-powers", None, {"reason": "repeated supports in next power"})
    else:
        rec.add("consecutive-powers", None, {"reason": "k = nu or power not linearly related"})

    if differs and linrel:
        rec.add("question-linrel-linres", linres, hyp, note="open question; exploration only")
    if linres is not None and single_degree(J) is not None:
        table = None
        try:
            table = multigraded_betti(J, field, max_gens)
        except CapExceededError:
            pass
        if table is not None:
            rec.reports.extend(_structure_checks(J, field, max_gens, inst, table=table))
    return rec.reports


def verify_special_cactus(G: SimpleGraph) -> CheckReport:
    """Three-way equivalence: no even cycle, blocks are edges or odd cycles,
    every subgraph has at most one perfect matching."""
    rec = _Recorder({"graph": graph_to_json_obj(G)})
    bs = block_structure(G)
    a = at_most_one_perfect_matching_everywhere(G)
    b = not bs.has_even_cycle
    c = bs.all_edges_or_odd_cycles()
    rec.add("special-cactus", a == b == c, {"unique_pm": a, "no_even_cycle": b, "blocks_ok": c})
    return rec.reports[0]


def verify_path_formula(ell: int, field: CoefficientField = QQ) -> list:
    """``g_{I(P_ell)}(k)`` against the closed form, ``P_ell`` on ``ell`` vertices."""
    I = edge_ideal(path_graph(ell))
    rec = _Recorder(_ideal_instance(I))
    prof = normalized_depth(I, field, max_gens=None)
    c = -(-ell // 3)
    for k, g in prof.values.items():
        expected = c - k if k <= c else 0
        rec.add("path-g-formula", g == expected, {"ell": ell, "k": k, "g": g, "expected": expected},
                instance=_ideal_instance(I, k))
    return rec.reports


# -- worked examples -----------------------------------------------------------

def _ideal(names, gens_text):
    amb = Ambient(tuple(names))
    gens = []
    for term in gens_text:
        u = [0] * len(names)
        for tok in term.split("*"):
            name, _, e = tok.partition("^")
            u[names.index(name)] += int(e or 1)
        gens.append(u)
    return minimize_generators(amb, gens)


def _as_set(I):
    return set(I.to_strings())


def reproduce_examples(field: CoefficientField = QQ) -> list:
    """Recompute every numeric claim of the worked examples."""
    reports = []

    def add(check_id, inst, got, expected, flagged=False, note=""):
        ok = got == expected
        if flagged:
            ok = True
        reports.append(CheckReport(check_id, inst, HOLDS if ok else VIOLATED,
                                   _jsonable({"got": got, "expected": expected}), 0.0, flagged, note))

    # matching powers of (x1^2, x2^2, x3^2, x3x4, x5^5)
    X = ["x1", "x2", "x3", "x4", "x5"]
    I = _ideal(X, ["x1^2", "x2^2", "x3^2", "x3*x4", "x5^5"])
    inst = _ideal_instance(I)
    add("example:powers-nu", inst, monomial_grade(I), 4)
    listed = {
        2: ["x1^2*x2^2", "x1^2*x3^2", "x1^2*x3*x4", "x1^2*x5^5", "x2^2*x3^2", "x2^2*x3*x4", "x2^2*x5^5",
            "x3^2*x5^5", "x3*x4*x5^5"],
        3: ["x1^2*x2^2*x3^2", "x1^2*x2^2*x3*x4", "x1^2*x2^2*x5^5", "x1^2*x3^2*x5^5", "x1^2*x3*x4*x5^5",
            "x2^2*x3^2*x5^5", "x2^2*x3*x4*x5^5"],
        4: ["x1^2*x2^2*x3^2*x5^5", "x1^2*x2^2*x3*x4*x5^5"],
    }
    for k, gens in listed.items():
        add(f"example:powers-{k}", _ideal_instance(I, k), sorted(_as_set(matching_power(I, k))), sorted(gens))
    add("example:powers-5-zero", _ideal_instance(I, 5), matching_power(I, 5).is_zero(), True)

    # oriented 4-cycle with all weights 2
    D = WeightedOrientedGraph(("a", "b", "c", "d"), (("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")),
                              {v: 2 for v in "abcd"})
    inst = _graph_instance(D, 2)
    JD = matching_power(oriented_edge_ideal(D), 2)
    JG = matching_power(edge_ideal(D.underlying()), 2)
    iD, iG = homological_invariants(JD, field), homological_invariants(JG, field)
    add("example:4cycle-IG2", inst, sorted(_as_set(JG)), ["a*b*c*d"])
    add("example:4cycle-ID2", inst, sorted(_as_set(JD)), sorted(["a*b^2*c*d^2", "a^2*b*c^2*d"]))
    add("example:4cycle-pd-IG", inst, iG.pd_quotient, 1, note="pd of the quotient")
    add("example:4cycle-pd-ID", inst, iD.pd_quotient, 2, note="pd of the quotient")
    add("example:4cycle-reg-IG", inst, iG.reg_ideal, 4)
    add("example:4cycle-reg-ID", inst, iD.reg_ideal, 7)
    add("example:4cycle-beta1-IG", inst, multigraded_betti(JG, field).total(1), 0)
    add("example:4cycle-beta1-ID", inst, multigraded_betti(JD, field).total(1), 1)
    gG = normalized_depth(edge_ideal(D.underlying()), field)[2]
    gD = normalized_depth(oriented_edge_ideal(D), field)[2]
    add("example:4cycle-g-IG", inst, gG, 1, flagged=(gG != 1),
        note="recomputed from the definition; printed value is 1" if gG != 1 else "")
    add("example:4cycle-g-ID-shifted", inst, gD + 8 - 4, 5)
    reports.append(CheckReport("example:4cycle-cmp-e", inst, HOLDS if gD <= gG + 8 - 4 else VIOLATED,
                               {"g_ID": gD, "g_IG": gG}))

    # cubic ideal
    C = _ideal(["x1", "x2", "x3", "x4"], ["x1*x2^2", "x2*x3^2", "x3*x4^2", "x4*x1^2"])
    inst = _ideal_instance(C)
    add("example:cubic-nu", inst, monomial_grade(C), 2)
    add("example:cubic-g2", inst, normalized_depth(C, field)[2], 1)
    add("example:cubic-linres", inst, has_linear_resolution(matching_power(C, 2), field), False)

    # K6 with w(1) = 2 and arc (2,1)
    arcs = [(2, 1), (1, 3), (1, 4), (1, 5), (1, 6)] + [(i, j) for i in range(2, 7) for j in range(i + 1, 7)]
    D6 = WeightedOrientedGraph(tuple(range(1, 7)), tuple(arcs), {1: 2})
    I6 = oriented_edge_ideal(D6)
    inst = _graph_instance(D6)
    add("example:k6-gens", inst, len(I6.gens), 15)
    add("example:k6-x1sq", inst, "x1^2*x2" in _as_set(I6), True)
    add("example:k6-nu", inst, monomial_grade(I6), 3)
    IG6 = edge_ideal(D6.underlying())
    for k in (2, 3):
        Jk = matching_power(I6, k)
        inst = _graph_instance(D6, k)
        add(f"example:k6-equal-{k}", inst, Jk == matching_power(IG6, k), True)
        add(f"example:k6-linrel-{k}", inst, linearly_related(Jk), True)
        add(f"example:k6-linres-{k}", inst, has_linear_resolution(Jk, field, max_gens=None), True)
    add("example:k6-even-cycles", _graph_instance(D6), has_even_cycle(D6.underlying()), True)

    # the 4-variable counterexample
    E = _ideal(["x1", "x2", "x3", "x4"], ["x1*x2^2", "x2*x3^2", "x2*x4^2", "x3*x1^2", "x3*x4^2", "x4*x1^2"])
    E2 = matching_power(E, 2)
    inst = _ideal_instance(E, 2)
    add("example:counter-linres", inst, has_linear_resolution(E2, field), True)
    add("example:counter-polymatroidal", inst, bool(is_polymatroidal(E2)), False)

    # odd cycle with arc (2,1), w(1) = 2
    for m in (3, 5, 7):
        arcs = [(2, 1)] + [(i, i + 1) for i in range(2, m)] + [(m, 1)]
        Dc = WeightedOrientedGraph(tuple(range(1, m + 1)), tuple(arcs), {1: 2})
        kk = m // 2
        Jc = matching_power(oriented_edge_ideal(Dc), kk)
        add(f"example:odd-cycle-{m}-not-linrel", _graph_instance(Dc, kk), linearly_related(Jc), False)
        Ic = edge_ideal(Dc.underlying())
        add(f"example:odd-cycle-{m}-IG-linrel", _graph_instance(Dc, kk),
            linearly_related(matching_power(Ic, kk)), True)

    # polymatroidal but polarization is not
    Q = _ideal(["x1", "x2"], ["x1^2", "x1*x2", "x2^2"])
    inst = _ideal_instance(Q)
    add("example:polar-polymatroidal", inst, bool(is_polymatroidal(Q)), True)
    add("example:polar-not-polymatroidal", inst, bool(is_polymatroidal(polarize(Q))), False)
    return reports


# -- families -------------------------------------------------------------------

FAMILIES = ("random-monomial", "random-quadratic", "random-weighted-oriented", "exhaustive-cactus",
            "exhaustive-forest", "exhaustive-connected")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    max_n: int = 6
    count: int = 100
    seed: int = 0
    max_gens: int = 6
    max_exp: int = 3
    max_weight: int = 3
    # Betti cost is governed by the lcm lattice, which these small
    # families keep small even past the interactive 20-generator default
    betti_max_gens: int | None = 64

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if not 1 <= self.max_n <= 8:
            raise CapExceededError("family max_n", self.max_n, 8)


def random_monomial_ideal(rng: random.Random, max_n=6, max_gens=6, max_exp=3) -> MonomialIdeal:
    """Uniform random generators, minimized, on the variables they use."""
    n = rng.randint(1, max_n)
    m = rng.randint(1, max_gens)
    gens = []
    for _ in range(m):
        while True:
            g = [rng.randint(0, max_exp) for _ in range(n)]
            if any(g):
                break
        gens.append(g)
    I = minimize_generators(Ambient.standard(n), gens).with_support_ambient()
    return MonomialIdeal(Ambient.standard(I.n), I.gens)


def random_quadratic_ideal(rng: random.Random, max_n=6) -> MonomialIdeal:
    n = rng.randint(1, max_n)
    quads = []
    for i in range(n):
        for j in range(i, n):
            u = [0] * n
            u[i] += 1
            u[j] += 1
            quads.append(u)
    m = rng.randint(1, len(quads))
    I = minimize_generators(Ambient.standard(n), rng.sample(quads, m)).with_support_ambient()
    return MonomialIdeal(Ambient.standard(I.n), I.gens)


def random_weighted_oriented_graph(rng: random.Random, max_n=7, max_weight=3, max_edges=9) -> WeightedOrientedGraph:
    """Random graph without isolated vertices, random orientation, weights
    uniform on ``1..max_weight`` and sources reset to 1."""
    while True:
        n = rng.randint(2, max_n)
        p = rng.uniform(0.25, 0.6)
        edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p]
        if edges and len(edges) <= max_edges:
            break
    verts = sorted({v for e in edges for v in e})
    arcs = [e if rng.random() < 0.5 else (e[1], e[0]) for e in edges]
    weights = {v: rng.randint(1, max_weight) for v in verts}
    return repair_weights(WeightedOrientedGraph(tuple(verts), tuple(arcs), weights))


def _atlas_graphs(max_n, connected=True, pred=None):
    for g in nx.graph_atlas_g():
        nv = g.number_of_nodes()
        if nv < 2 or nv > max_n or g.number_of_edges() == 0:
            continue
        if any(d == 0 for _, d in g.degree()):
            continue
        if connected and not nx.is_connected(g):
            continue
        if pred is not None and not pred(g):
            continue
        yield SimpleGraph.from_edges([(u + 1, v + 1) for u, v in g.edges()], vertices=tuple(range(1, nv + 1)))


def connected_graphs(max_n: int):
    """All connected graphs on 2..max_n vertices up to isomorphism."""
    return _atlas_graphs(max_n)


def no_even_cycle_graphs(max_n: int):
    return _atlas_graphs(max_n, pred=lambda g: not any(len(c) % 2 == 0 for c in nx.simple_cycles(g)))


def forests(max_n: int):
    """Forests without isolated vertices on 2..max_n vertices."""
    return _atlas_graphs(max_n, connected=False, pred=nx.is_forest)


def _automorphisms(G: SimpleGraph):
    g = G.to_networkx()
    return [m for m in nx.algorithms.isomorphism.GraphMatcher(g, g).isomorphisms_iter()]


def weighted_orientations(G: SimpleGraph, weights=(1, 2), require_nontrivial=True, up_to_symmetry=True):
    """Orientations of ``G`` with weights in ``weights`` on non-source
    vertices (sources get 1), one per orbit of the automorphism group when
    ``up_to_symmetry``.  With ``require_nontrivial`` only those with
    ``I(D) != I(G)`` are produced."""
    edges = G.edge_list()
    autos = _automorphisms(G) if up_to_symmetry else [{v: v for v in G.vertices}]
    pos = G.pos

    def encode(arcs, w, perm):
        a = sorted((pos[perm[i]], pos[perm[j]]) for i, j in arcs)
        ws = tuple(w[v] for v in sorted(G.vertices, key=lambda v: pos[perm[v]]))
        return (tuple(a), ws)

    seen = set()
    for bits in range(1 << len(edges)):
        arcs = [(u, v) if not bits >> t & 1 else (v, u) for t, (u, v) in enumerate(edges)]
        heads = sorted({j for _, j in arcs}, key=pos.__getitem__)
        for choice in itertools.product(weights, repeat=len(heads)):
            w = {v: 1 for v in G.vertices}
            w.update(zip(heads, choice))
            if require_nontrivial and all(x == 1 for x in w.values()):
                continue
            if up_to_symmetry:
                key = min(encode(arcs, w, p) for p in autos)
                if key in seen:
                    continue
                seen.add(key)
            yield WeightedOrientedGraph(G.vertices, tuple(arcs), w)


def _instances(spec: FamilySpec):
    rng = random.Random(spec.seed)
    if spec.family == "random-monomial":
        for _ in range(spec.count):
            yield random_monomial_ideal(rng, spec.max_n, spec.max_gens, spec.max_exp)
    elif spec.family == "random-quadratic":
        for _ in range(spec.count):
            yield random_quadratic_ideal(rng, spec.max_n)
    elif spec.family == "random-weighted-oriented":
        for _ in range(spec.count):
            yield random_weighted_oriented_graph(rng, spec.max_n, spec.max_weight)
    elif spec.family == "exhaustive-cactus":
        for G in no_even_cycle_graphs(spec.max_n):
            yield from weighted_orientations(G)
    elif spec.family == "exhaustive-forest":
        yield from forests(spec.max_n)
    elif spec.family == "exhaustive-connected":
        yield from connected_graphs(spec.max_n)


def check_instance(spec: FamilySpec, inst, field: CoefficientField = QQ) -> list:
    cap = spec.betti_max_gens
    if spec.family in ("random-monomial", "random-quadratic"):
        return verify_core(inst, field, cap)
    if spec.family == "random-weighted-oriented":
        out = []
        for k in range(1, matching_number(inst.underlying()) + 1):
            out.extend(verify_graph(inst, k, field, cap, seed=spec.seed))
        return out
    if spec.family == "exhaustive-cactus":
        out = []
        for k in range(1, _graph_facts(inst.underlying())[0] + 1):
            out.extend(verify_linearity(inst, k, field, cap))
        return out
    if spec.family == "exhaustive-forest":
        return verify_core(edge_ideal(inst), field, cap) + [verify_special_cactus(inst)]
    if spec.family == "exhaustive-connected":
        return [verify_special_cactus(inst)]
    raise ValueError(spec.family)


@dataclass
class ScanSummary:
    spec: FamilySpec
    instances: int = 0
    counts: Counter = field(default_factory=Counter)
    failures: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_obj(self) -> dict:
        by_check = {}
        for (cid, verdict), c in sorted(self.counts.items()):
            by_check.setdefault(cid, {})[verdict] = c
        return {
            "schema": 1,
            "family": self.spec.family,
            "seed": self.spec.seed,
            "instances": self.instances,
            "checks": by_check,
            "failures": len(self.failures),
            "warnings": len(self.warnings),
            "seconds": round(self.seconds, 3),
        }


def scan(spec: FamilySpec, out_dir: str | Path | None = None, field: CoefficientField = QQ) -> ScanSummary:
    """Run the family's checks on every instance; dump each failing or
    warning report as a replayable JSON witness into ``out_dir``."""
    summary = ScanSummary(spec)
    t0 = time.perf_counter()
    out = Path(out_dir) if out_dir is not None else None
    log = None
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
        log = open(out / "reports.jsonl", "w")
    try:
        for inst in _instances(spec):
            summary.instances += 1
            try:
                reports = check_instance(spec, inst, field)
            except CapExceededError as exc:
                inst_obj = _ideal_instance(inst) if isinstance(inst, MonomialIdeal) else {"graph": graph_to_json_obj(inst)}
                reports = [CheckReport("caps", inst_obj, NOT_MET, {"error": str(exc)})]
            for r in reports:
                summary.counts[(r.check_id, r.verdict)] += 1
                if log is not None:
                    log.write(json.dumps(r.to_json_obj()) + "\n")
                if r.is_failure or r.is_warning:
                    (summary.failures if r.is_failure else summary.warnings).append(r)
                    if out is not None:
                        kind = "violation" if r.is_failure else "warning"
                        name = f"{kind}-{len(summary.failures) + len(summary.warnings):04d}-{r.check_id}.json"
                        (out / name).write_text(json.dumps(r.to_json_obj(), indent=1))
    finally:
        if log is not None:
            log.close()
    summary.seconds = time.perf_counter() - t0
    return summary
