"""Objective construction, the two bound pipelines, and certificates.

All bound arithmetic is exact (Fraction); floors are applied only at
certificate boundaries.  Two intersection predicates are deliberately kept
apart: a circuit *goes through* an occurrence when they share at least two
edges (oddness pipeline), and *intersects* it when they share a vertex
(5-circuit pipeline).
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Any, Sequence

from .coloring import UNCOLORABLE, even_two_factor_from_coloring, three_edge_color
from .connectivity import bridges
from .errors import HasBridge, NoPerfectMatching
from .factors import TwoFactor, complement_two_factor, two_factor_from_edges
from .formats import parse_graph, serialize_graph
from .graphs import (
    CubicGraph,
    MultiGraph,
    enumerate_circuits_up_to,
    girth,
    is_petersen,
)
from .matching import (
    WeightVector,
    enumerate_perfect_matchings,
    fractional_objective_value,
    has_two_factor,
    min_weight_perfect_matching,
)
from .patterns import (
    Census,
    P3A,
    PatternOccurrence,
    circuit_intersects,
    classify_occurrences,
    find_occurrences,
    goes_through,
    select_boundary_edges,
)
from .reductions import (
    ReductionTrace,
    TERMINAL_COLORABLE,
    TERMINAL_PETERSEN,
    full_reduce,
    lift_two_factor,
)

THEOREM_FIVE = "T2-fivecirc"
THEOREM_ODD = "T1-oddness"
THEOREM_NONTRIVIAL = "T4-nontrivial"

P2_TIEBREAK_CAP = 10_000

FLAG_EXCEPTIONAL = "exceptional"
FLAG_COLORABLE = "colorable"
FLAG_REDUCED_PETERSEN = "reduced-to-petersen"
FLAG_BEST_EFFORT = "best-effort"
FLAG_EXCEPTION_22 = "disjointness-exception-22"


def graph_id(g: MultiGraph) -> str:
    return hashlib.sha256(serialize_graph(g).encode()).hexdigest()[:12]


@dataclass(frozen=True)
class Certificate:
    theorem: str
    graph_id: str
    n: int
    bound_value: Fraction
    achieved: int
    census: tuple[int, int, int, int | None, int | None, int] | None = None
    matching_weight: int | None = None
    fractional_bound: Fraction | None = None
    flags: frozenset[str] = frozenset()
    reduced_graph: str | None = None
    reduced_factor: tuple[int, ...] | None = None
    reduced_n: int | None = None
    achieved_reduced: int | None = None
    invariant_I: Fraction | None = None
    trace_summary: tuple = ()
    schema: str = "pentafactor.certificate/1"

    @property
    def bound_floor(self) -> int:
        return math.floor(self.bound_value)

    def to_json(self) -> dict[str, Any]:
        return {
            "schema": self.schema,
            "theorem": self.theorem,
            "graph_id": self.graph_id,
            "n": self.n,
            "bound_value": str(self.bound_value),
            "bound_floor": self.bound_floor,
            "achieved": self.achieved,
            "census": list(self.census) if self.census is not None else None,
            "matching_weight": self.matching_weight,
            "fractional_bound": (
                str(self.fractional_bound) if self.fractional_bound is not None else None
            ),
            "flags": sorted(self.flags),
            "reduced_graph": self.reduced_graph,
            "reduced_factor": (
                list(self.reduced_factor) if self.reduced_factor is not None else None
            ),
            "reduced_n": self.reduced_n,
            "achieved_reduced": self.achieved_reduced,
            "invariant_I": str(self.invariant_I) if self.invariant_I is not None else None,
            "trace": [dict(t) for t in self.trace_summary],
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "Certificate":
        return cls(
            theorem=data["theorem"],
            graph_id=data["graph_id"],
            n=data["n"],
            bound_value=Fraction(data["bound_value"]),
            achieved=data["achieved"],
            census=tuple(data["census"]) if data.get("census") is not None else None,
            matching_weight=data.get("matching_weight"),
            fractional_bound=(
                Fraction(data["fractional_bound"])
                if data.get("fractional_bound") is not None
                else None
            ),
            flags=frozenset(data.get("flags", ())),
            reduced_graph=data.get("reduced_graph"),
            reduced_factor=(
                tuple(data["reduced_factor"])
                if data.get("reduced_factor") is not None
                else None
            ),
            reduced_n=data.get("reduced_n"),
            achieved_reduced=data.get("achieved_reduced"),
            invariant_I=(
                Fraction(data["invariant_I"]) if data.get("invariant_I") is not None else None
            ),
            trace_summary=tuple(tuple(sorted(t.items())) for t in data.get("trace", ()))
            if data.get("trace")
            else (),
            schema=data.get("schema", "pentafactor.certificate/1"),
        )


# -- weights -------------------------------------------------------------------


def free_five_circuits(g: MultiGraph, census: Census) -> list:
    """The set C5 for the census mode: 5-circuits not intersecting (fivecyc)
    or not going through (oddness) any classified occurrence."""
    fives = [c for c in enumerate_circuits_up_to(g, 5) if c.length == 5]
    if census.mode == "fivecyc":
        return [
            c for c in fives
            if not any(circuit_intersects(c, s) for s in census.occurrences)
        ]
    return [
        c for c in fives
        if not any(goes_through(c, s) for s in census.occurrences)
    ]


def build_weights_5cyc(
    g: MultiGraph, p1_all: Sequence[PatternOccurrence], c5: Sequence
) -> dict[int, int]:
    """Quarter-unit weights: one per free-5-circuit boundary, four on each e_S."""
    w: dict[int, int] = {}
    for c in c5:
        for e in g.boundary_edge_ids(c.vertex_set):
            w[e] = w.get(e, 0) + 1
    for s in p1_all:
        assert s.e_S is not None
        w[s.e_S] = w.get(s.e_S, 0) + 4
    return w


def build_weights_oddness(g: MultiGraph, census: Census, c5: Sequence) -> dict[int, int]:
    """Quarter-unit weights: C5 boundaries plus 8 per P1 e_S, 4 per P2 e_S,
    4 per edge of each P3a pair."""
    w: dict[int, int] = {}
    for c in c5:
        for e in g.boundary_edge_ids(c.vertex_set):
            w[e] = w.get(e, 0) + 1
    for s in census.p1:
        assert s.e_S is not None
        w[s.e_S] = w.get(s.e_S, 0) + 8
    for s in census.p2:
        assert s.e_S is not None
        w[s.e_S] = w.get(s.e_S, 0) + 4
    for s in census.p3:
        if s.class_tag == P3A:
            assert s.E_S
            for e in s.E_S:
                w[e] = w.get(e, 0) + 4
    return w


# -- P2 tie-break -----------------------------------------------------------------


def _constrained_min(
    g: MultiGraph, w: WeightVector, forced: frozenset[int], forbidden: frozenset[int]
) -> tuple[frozenset[int], int] | None:
    covered = set()
    for e in forced:
        u, v = g.endpoints(e)
        if u in covered or v in covered:
            return None
        covered.add(u)
        covered.add(v)
    rest_edges = {
        e: g.endpoints(e)
        for e in g.edge_ids
        if e not in forbidden
        and e not in forced
        and not (set(g.endpoints(e)) & covered)
    }
    rest_vertices = [v for v in g.vertices if v not in covered]
    sub = MultiGraph(rest_edges, vertices=rest_vertices)
    try:
        m, wt = min_weight_perfect_matching(sub, w)
    except NoPerfectMatching:
        return None
    total = wt + sum(w.get(e, 0) for e in forced)
    return forced | m, total


def enumerate_optimal_matchings(
    g: MultiGraph, w: WeightVector, cap: int
) -> tuple[list[frozenset[int]], bool]:
    """All minimum-weight perfect matchings via Murty-style partitioning.

    Returns (matchings, cap_exceeded).  Subproblem cells are disjoint, so no
    deduplication is needed.
    """
    base = _constrained_min(g, w, frozenset(), frozenset())
    if base is None:
        raise NoPerfectMatching("graph has no perfect matching")
    _, best_wt = base
    out: list[frozenset[int]] = []
    stack: list[tuple[frozenset[int], frozenset[int]]] = [(frozenset(), frozenset())]
    while stack:
        forced, forbidden = stack.pop()
        res = _constrained_min(g, w, forced, forbidden)
        if res is None:
            continue
        m, wt = res
        if wt > best_wt:
            continue
        out.append(m)
        if len(out) > cap:
            return out, True
        free = sorted(m - forced)
        acc = set(forced)
        for e in free:
            stack.append((frozenset(acc), forbidden | {e}))
            acc.add(e)
    out.sort(key=lambda m: tuple(sorted(m)))
    return out, False


def _p2_pairs(g: MultiGraph, m: frozenset[int], census: Census) -> int:
    factor = complement_two_factor(g, m)
    return sum(
        1
        for s in census.p2
        for c in factor.circuits
        if goes_through(c, s)
    )


def p2_tiebreak(
    g: MultiGraph, w: WeightVector, census: Census, cap: int = P2_TIEBREAK_CAP
) -> tuple[frozenset[int], int, bool]:
    """Among minimum-weight matchings, minimize (P2 occurrence, circuit)
    through-pairs.  Returns (matching, weight, best_effort)."""
    m0, wt = min_weight_perfect_matching(g, w)
    if not census.p2:
        return m0, wt, False
    matchings, capped = enumerate_optimal_matchings(g, w, cap)
    best = min(matchings, key=lambda m: (_p2_pairs(g, m, census), tuple(sorted(m))))
    if not capped:
        return best, wt, False
    best = _local_pair_search(g, w, census, best)
    return best, wt, True


def _local_pair_search(
    g: MultiGraph, w: WeightVector, census: Census, m: frozenset[int]
) -> frozenset[int]:
    """Hill-climb on weight-preserving alternating cycles near P2 occurrences."""
    region: set[int] = set()
    for s in census.p2:
        region |= s.host_vertices
        for v in s.host_vertices:
            region.update(g.neighbors(v))
    current = set(m)
    best_pairs = _p2_pairs(g, frozenset(current), census)
    for _ in range(50):
        improved = False
        for cyc in _alternating_cycles(g, current, region, max_len=10):
            delta = sum(w.get(e, 0) for e in cyc if e not in current) - sum(
                w.get(e, 0) for e in cyc if e in current
            )
            if delta != 0:
                continue
            candidate = frozenset(current ^ set(cyc))
            pairs = _p2_pairs(g, candidate, census)
            if pairs < best_pairs:
                current = set(candidate)
                best_pairs = pairs
                improved = True
                break
        if not improved:
            break
    return frozenset(current)


def _alternating_cycles(g, matching: set[int], region: set[int], max_len: int):
    for start in sorted(region):
        m_edges = [e for e in g.incident(start) if e in matching]
        if not m_edges:
            continue
        first = m_edges[0]

        def walk(v, need_matched, path):
            if len(path) > max_len:
                return
            for e in g.incident(v):
                if e in path:
                    continue
                if (e in matching) != need_matched:
                    continue
                u = g.other_end(e, v)
                if u == start and not need_matched and len(path) >= 3:
                    yield path + [e]
                    continue
                if u not in region or u == start:
                    continue
                yield from walk(u, not need_matched, path + [e])

        # Start along the matched edge so the cycle alternates.
        yield from walk(g.other_end(first, start), False, [first])


# -- pipelines -----------------------------------------------------------------


def _reduced_bundle(
    reduced: MultiGraph, factor: TwoFactor
) -> tuple[str, tuple[int, ...]]:
    relabel = {v: i for i, v in enumerate(reduced.vertices)}
    entries = sorted(
        (tuple(sorted((relabel[u], relabel[v]))), eid)
        for eid, (u, v) in reduced.edge_items()
    )
    lines = [f"cubicmg {reduced.n} {reduced.m}"]
    lines += [f"{pair[0]} {pair[1]}" for pair, _ in entries]
    index_of = {eid: i for i, (_, eid) in enumerate(entries)}
    idx = tuple(sorted(index_of[e] for e in factor.edge_ids))
    return "\n".join(lines), idx


def _validated_input(g: CubicGraph) -> None:
    if bridges(g):
        raise HasBridge("solver requires a 2-edge-connected input")


def _fill_boundary(g, census: Census, circuits9, matcher) -> Census:
    p1 = tuple(select_boundary_edges(g, o, circuits9, matcher, census) for o in census.p1)
    p2 = tuple(select_boundary_edges(g, o, circuits9, matcher, census) for o in census.p2)
    p3 = tuple(select_boundary_edges(g, o, circuits9, matcher, census) for o in census.p3)
    return Census(census.mode, p1, p2, p3, census.exception_22)


def _census_counts(census: Census, c5_count: int) -> tuple:
    if census.mode == "fivecyc":
        return (c5_count, len(census.p1), 0, None, None, len(census.p3))
    p3a, p3b = census.p3_split()
    return (c5_count, len(census.p1), len(census.p2), len(p3a), len(p3b), len(census.p3))


def solve_5cyc(g: CubicGraph) -> tuple[TwoFactor, Certificate]:
    """A triangle-free 2-factor with at most 2(n-2)/15 five-circuits.

    Pipeline: colorable inputs get an even 2-factor; snarks are reduced, the
    reduced graph is solved via the linear objective over the matching
    polytope, and the factor is lifted back.  The Petersen graph itself is
    exceptional (achieved 2).
    """
    _validated_input(g)
    gid = graph_id(g)
    bound = Fraction(2 * (g.n - 2), 15)
    if is_petersen(g):
        m = enumerate_perfect_matchings(g)[0]
        factor = complement_two_factor(g, m)
        cert = Certificate(
            THEOREM_FIVE, gid, g.n, bound, factor.count5, flags=frozenset({FLAG_EXCEPTIONAL})
        )
        return factor, cert
    coloring = three_edge_color(g)
    if coloring is not UNCOLORABLE:
        factor = even_two_factor_from_coloring(g, coloring)
        cert = Certificate(
            THEOREM_FIVE, gid, g.n, bound, 0, flags=frozenset({FLAG_COLORABLE})
        )
        return factor, cert
    trace = full_reduce(g)
    factor, cert = _solve_5cyc_reduced(g, gid, bound, trace)
    assert factor.count3 == 0
    if FLAG_EXCEPTIONAL not in cert.flags:
        assert cert.achieved <= cert.bound_floor, "five-circuit bound violated"
    return factor, cert


def _best_lift(trace: ReductionTrace, candidates: list[TwoFactor], key) -> TwoFactor:
    lifted = [lift_two_factor(trace, f) for f in candidates]
    return min(lifted, key=key)


def _solve_5cyc_reduced(
    g: CubicGraph, gid: str, bound: Fraction, trace: ReductionTrace
) -> tuple[TwoFactor, Certificate]:
    reduced = trace.reduced
    summary = tuple(trace.summary())
    if trace.terminal_flag == TERMINAL_PETERSEN:
        # Any lone Petersen factor has two 5-circuits, which can exceed the
        # bound for small hosts; lift all six and keep the best.
        cands = [complement_two_factor(reduced, m) for m in enumerate_perfect_matchings(reduced)]
        factor = _best_lift(trace, cands, key=lambda f: (f.count5, tuple(sorted(f.edge_ids))))
        cert = Certificate(
            THEOREM_FIVE, gid, g.n, bound, factor.count5,
            flags=frozenset({FLAG_REDUCED_PETERSEN}),
            reduced_n=reduced.n, trace_summary=summary,
        )
        return factor, cert
    if trace.terminal_flag == TERMINAL_COLORABLE:
        coloring = three_edge_color(reduced)
        assert coloring is not UNCOLORABLE
        factor = lift_two_factor(trace, even_two_factor_from_coloring(reduced, coloring))
        cert = Certificate(
            THEOREM_FIVE, gid, g.n, bound, factor.count5,
            flags=frozenset({FLAG_COLORABLE}),
            reduced_n=reduced.n, trace_summary=summary,
        )
        return factor, cert

    p1 = find_occurrences(reduced, "P1")
    p3 = find_occurrences(reduced, "P3")
    census = classify_occurrences(reduced, p1, (), p3, mode="fivecyc", enforce_disjoint=True)
    census = Census(
        census.mode,
        tuple(replace(o, e_S=min(o.boundary)) for o in census.p1),
        (),
        census.p3,
        census.exception_22,
    )
    c5 = free_five_circuits(reduced, census)
    weights = build_weights_5cyc(reduced, census.p1, c5)
    matching, wt = min_weight_perfect_matching(reduced, weights)
    frac = fractional_objective_value(reduced, weights)
    assert wt <= frac, "polytope inequality violated"
    factor_reduced = complement_two_factor(reduced, matching)
    # Per-instance accounting from the proof, in whole units.
    assert (
        Fraction(factor_reduced.count5)
        <= Fraction(wt, 4) - Fraction(len(c5), 4) + len(census.p1) + len(census.p3)
    ), "five-circuit accounting violated on the reduced graph"
    factor = lift_two_factor(trace, factor_reduced)
    bundle, fidx = _reduced_bundle(reduced, factor_reduced)
    flags = {FLAG_EXCEPTION_22} if census.exception_22 else set()
    cert = Certificate(
        THEOREM_FIVE, gid, g.n, bound, factor.count5,
        census=_census_counts(census, len(c5)),
        matching_weight=wt, fractional_bound=frac,
        flags=frozenset(flags),
        reduced_graph=bundle, reduced_factor=fidx, reduced_n=reduced.n,
        achieved_reduced=factor_reduced.count5,
        trace_summary=summary,
    )
    return factor, cert


def solve_oddness(
    g: CubicGraph, tiebreak_cap: int = P2_TIEBREAK_CAP
) -> tuple[TwoFactor, Certificate]:
    """A 2-factor with few odd circuits; the bound 6n/35 is certified on the
    reduced graph and the lifted factor is returned with its own statistics.
    """
    _validated_input(g)
    gid = graph_id(g)
    if is_petersen(g):
        m = enumerate_perfect_matchings(g)[0]
        factor = complement_two_factor(g, m)
        cert = Certificate(
            THEOREM_ODD, gid, g.n, Fraction(6 * g.n, 35), factor.odd_count,
            flags=frozenset({FLAG_EXCEPTIONAL}),
        )
        return factor, cert
    coloring = three_edge_color(g)
    if coloring is not UNCOLORABLE:
        factor = even_two_factor_from_coloring(g, coloring)
        cert = Certificate(
            THEOREM_ODD, gid, g.n, Fraction(6 * g.n, 35), 0,
            flags=frozenset({FLAG_COLORABLE}), invariant_I=factor.invariant_I,
        )
        return factor, cert
    trace = full_reduce(g)
    reduced = trace.reduced
    summary = tuple(trace.summary())
    if trace.terminal_flag == TERMINAL_PETERSEN:
        cands = [complement_two_factor(reduced, m) for m in enumerate_perfect_matchings(reduced)]
        factor = _best_lift(trace, cands, key=lambda f: (f.odd_count, tuple(sorted(f.edge_ids))))
        cert = Certificate(
            THEOREM_ODD, gid, g.n, Fraction(6 * reduced.n, 35), 2,
            flags=frozenset({FLAG_EXCEPTIONAL, FLAG_REDUCED_PETERSEN}),
            reduced_n=reduced.n, achieved_reduced=2, trace_summary=summary,
        )
        return factor, cert
    if trace.terminal_flag == TERMINAL_COLORABLE:
        coloring = three_edge_color(reduced)
        factor = lift_two_factor(trace, even_two_factor_from_coloring(reduced, coloring))
        cert = Certificate(
            THEOREM_ODD, gid, g.n, Fraction(6 * reduced.n, 35), 0,
            flags=frozenset({FLAG_COLORABLE}), reduced_n=reduced.n,
            trace_summary=summary,
        )
        return factor, cert

    p1 = find_occurrences(reduced, "P1")
    p2 = find_occurrences(reduced, "P2")
    p3 = find_occurrences(reduced, "P3")
    census = classify_occurrences(reduced, p1, p2, p3, mode="oddness", enforce_disjoint=True)
    circuits9 = enumerate_circuits_up_to(reduced, 9)
    matcher = lambda c: has_two_factor(reduced, c.vertex_set)
    census = _fill_boundary(reduced, census, circuits9, matcher)
    c5 = [
        c for c in circuits9
        if c.length == 5 and not any(goes_through(c, s) for s in census.occurrences)
    ]
    weights = build_weights_oddness(reduced, census, c5)
    matching, wt, best_effort = p2_tiebreak(reduced, weights, census, tiebreak_cap)
    frac = fractional_objective_value(reduced, weights)
    assert wt <= frac, "polytope inequality violated"
    factor_reduced = complement_two_factor(reduced, matching)
    k = factor_reduced.odd_count
    assert k % 2 == 0, "oddness must be even"
    p3a, p3b = census.p3_split()
    assert (
        factor_reduced.invariant_I
        <= Fraction(wt, 4) - Fraction(len(c5), 4) + len(p3b)
    ), "I(M) accounting violated on the reduced graph"
    bound = Fraction(6 * reduced.n, 35)
    assert k <= math.floor(bound), "oddness bound violated on the reduced graph"
    factor = lift_two_factor(trace, factor_reduced)
    bundle, fidx = _reduced_bundle(reduced, factor_reduced)
    flags = set()
    if best_effort:
        flags.add(FLAG_BEST_EFFORT)
    if census.exception_22:
        flags.add(FLAG_EXCEPTION_22)
    cert = Certificate(
        THEOREM_ODD, gid, g.n, bound, k,
        census=_census_counts(census, len(c5)),
        matching_weight=wt, fractional_bound=frac,
        flags=frozenset(flags),
        reduced_graph=bundle, reduced_factor=fidx, reduced_n=reduced.n,
        achieved_reduced=k, invariant_I=factor_reduced.invariant_I,
        trace_summary=summary,
    )
    return factor, cert


# -- verification ------------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    ok: bool
    failures: tuple[str, ...]


def verify_certificate(g: CubicGraph, factor: TwoFactor, cert: Certificate) -> Verdict:
    """Recompute every certified quantity independently; list violations."""
    failures: list[str] = []

    def check(cond: bool, msg: str) -> None:
        if not cond:
            failures.append(msg)

    try:
        rebuilt = two_factor_from_edges(g, factor.edge_ids)
    except Exception as exc:
        return Verdict(False, (f"factor invalid on graph: {exc}",))
    check(rebuilt.invariant_I == Fraction(7 * rebuilt.odd_count, 2) - Fraction(g.n, 2),
          "I(M) identity violated")
    check(cert.n == g.n, "certificate n mismatch")

    if cert.theorem in (THEOREM_FIVE, THEOREM_NONTRIVIAL):
        check(rebuilt.count3 == 0, "factor contains a triangle")
        check(cert.achieved == rebuilt.count5, "achieved != factor 5-count")
        expected = (
            Fraction(g.n, 10)
            if cert.theorem == THEOREM_NONTRIVIAL
            else Fraction(2 * (g.n - 2), 15)
        )
        check(cert.bound_value == expected, "bound value mismatch")
    elif cert.theorem == THEOREM_ODD:
        if cert.reduced_n is not None and FLAG_EXCEPTIONAL not in cert.flags:
            check(cert.bound_value == Fraction(6 * cert.reduced_n, 35),
                  "bound value mismatch")
        check(cert.achieved % 2 == 0, "oddness must be even")
    else:
        failures.append(f"unknown theorem tag {cert.theorem}")

    if FLAG_EXCEPTIONAL not in cert.flags:
        check(cert.achieved <= cert.bound_floor, "achieved exceeds floor(bound)")
    if cert.matching_weight is not None and cert.fractional_bound is not None:
        check(cert.matching_weight <= cert.fractional_bound,
              "matching weight exceeds fractional bound")

    if cert.reduced_graph is not None and cert.reduced_factor is not None:
        failures.extend(_verify_reduced_bundle(cert))
    return Verdict(not failures, tuple(failures))


def _verify_reduced_bundle(cert: Certificate) -> list[str]:
    failures: list[str] = []
    try:
        reduced = parse_graph(cert.reduced_graph)
    except Exception as exc:
        return [f"reduced graph unparseable: {exc}"]
    try:
        rfactor = two_factor_from_edges(reduced, frozenset(cert.reduced_factor))
    except Exception as exc:
        return [f"reduced factor invalid: {exc}"]
    if cert.reduced_n is not None and reduced.n != cert.reduced_n:
        failures.append("reduced n mismatch")
    mode = "fivecyc" if cert.theorem in (THEOREM_FIVE, THEOREM_NONTRIVIAL) else "oddness"
    if cert.achieved_reduced is not None:
        got = rfactor.count5 if mode == "fivecyc" else rfactor.odd_count
        if got != cert.achieved_reduced:
            failures.append("achieved_reduced mismatch with reduced factor")
    if cert.invariant_I is not None and rfactor.invariant_I != cert.invariant_I:
        failures.append("invariant_I mismatch with reduced factor")
    if cert.census is None:
        return failures
    p1 = find_occurrences(reduced, "P1")
    p2 = find_occurrences(reduced, "P2") if mode == "oddness" else ()
    p3 = find_occurrences(reduced, "P3")
    census = classify_occurrences(reduced, p1, p2, p3, mode=mode, enforce_disjoint=True)
    if mode == "oddness":
        circuits9 = enumerate_circuits_up_to(reduced, 9)
        matcher = lambda c: has_two_factor(reduced, c.vertex_set)
        census = _fill_boundary(reduced, census, circuits9, matcher)
    c5 = free_five_circuits(reduced, census)
    counts = _census_counts(census, len(c5))
    if counts != cert.census:
        failures.append(f"census mismatch: recomputed {counts}, certified {cert.census}")
    c5n, p1n, p2n, p3an, p3bn, p3n = counts
    if mode == "oddness":
        lhs = Fraction(reduced.n)
        rhs = (Fraction(5, 3) * c5n + 10 * p1n + 10 * p2n + 9 * (p3an or 0)
               + 10 * (p3bn or 0))
        if lhs < rhs:
            failures.append("vertex-count inequality violated on reduced graph")
        expected_frac = Fraction(5 * c5n + 8 * p1n + 4 * p2n + 8 * (p3an or 0), 3)
    else:
        lhs = Fraction(reduced.n)
        rhs = Fraction(5, 3) * c5n + 10 * p1n + 9 * p3n
        if lhs < rhs:
            failures.append("vertex-count inequality violated on reduced graph")
        expected_frac = Fraction(5 * c5n + 4 * p1n, 3)
    if cert.fractional_bound is not None and cert.fractional_bound != expected_frac:
        failures.append("fractional bound does not match census")
    return failures


def nontrivial_certificate(g: CubicGraph) -> tuple[TwoFactor, Certificate] | None:
    """The n/10 certificate for cyclically 4-edge-connected girth-5 inputs,
    or None when the preconditions do not hold."""
    from .connectivity import cyclic_edge_connectivity
    from .errors import NotDefined

    if is_petersen(g) or girth(g) != 5:
        return None
    try:
        if cyclic_edge_connectivity(g) < 4:
            return None
    except NotDefined:
        return None
    factor, cert = solve_5cyc(g)
    bound = Fraction(g.n, 10)
    cert = replace(cert, theorem=THEOREM_NONTRIVIAL, bound_value=bound)
    assert cert.achieved <= cert.bound_floor, "n/10 bound violated"
    return factor, cert
