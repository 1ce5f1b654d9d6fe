"""Girth and small-cut reductions with invertible traces for 2-factor lift-back.

Every step records a lift table: keyed by the subset of the step's new edges
that a 2-factor of the reduced graph uses, it lists the original edges that
replace them.  Lifting never introduces 3- or 5-circuits and never increases
the 5-circuit count (asserted per step).

Step order inside full_reduce mirrors the proofs' dependency order: 2-cycles,
triangles, 4-circuits, then 2-cuts, then independent non-trivial 3-cuts,
looping to a fixpoint.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .coloring import EdgeColoring, UNCOLORABLE, three_edge_color
from .connectivity import bridges, small_cuts
from .errors import BridgeCreated, HasBridge, InvalidFactor
from .factors import TwoFactor, two_factor_from_edges
from .graphs import (
    Circuit,
    CubicGraph,
    enumerate_circuits_up_to,
    girth,
    is_petersen,
)


class _Sentinel:
    def __init__(self, name: str):
        self._name = name

    def __repr__(self) -> str:
        return self._name

    def __bool__(self) -> bool:
        return False


NO_SHORT_CIRCUIT = _Sentinel("NO_SHORT_CIRCUIT")
NO_COLORABLE_CUT = _Sentinel("NO_COLORABLE_CUT")

TERMINAL_GENERIC = "Generic"
TERMINAL_PETERSEN = "Petersen"
TERMINAL_COLORABLE = "Colorable"


@dataclass(frozen=True)
class ReductionStep:
    kind: str
    pre: CubicGraph
    post: CubicGraph
    new_ids: frozenset[int]
    # Lift table: subset of new_ids used by the reduced factor -> original
    # edge ids that replace them.
    cases: dict[frozenset[int], tuple[int, ...]]
    side_coloring: EdgeColoring | None = None
    choice_data: str | None = None
    detail: dict[str, Any] = field(default_factory=dict)

    def lift_edges(self, edges: set[int]) -> set[int]:
        trigger = frozenset(edges & self.new_ids)
        if trigger not in self.cases:
            raise InvalidFactor(f"factor uses new edges {sorted(trigger)} in no lift case")
        return (edges - trigger) | set(self.cases[trigger])


@dataclass(frozen=True)
class ReductionTrace:
    original: CubicGraph
    reduced: CubicGraph
    steps: tuple[ReductionStep, ...]
    terminal_flag: str

    def summary(self) -> list[dict[str, Any]]:
        return [
            {"kind": s.kind, "n_before": s.pre.n, "n_after": s.post.n, **s.detail}
            for s in self.steps
        ]


def _derive(g: CubicGraph, drop_vertices: set[int],
            add_edges: dict[int, tuple[int, int]]) -> CubicGraph:
    keep = [v for v in g.vertices if v not in drop_vertices]
    edges = {e: g.endpoints(e) for e in g.induced_edge_ids(keep)}
    edges.update(add_edges)
    return CubicGraph(edges, vertices=keep)


# -- girth reduction -----------------------------------------------------------


def reduce_girth_step(g: CubicGraph) -> ReductionStep | _Sentinel:
    """Eliminate one 2-cycle, triangle, or 4-circuit; NO_SHORT_CIRCUIT when no
    reducible short circuit exists (girth >= 5, or the graph is too small for
    the construction, e.g. the theta multigraph)."""
    if bridges(g):
        raise HasBridge("girth reduction requires a bridgeless graph")
    for c in enumerate_circuits_up_to(g, 2):
        step = _two_cycle_step(g, c)
        if step is not None:
            return step
    for c in (c for c in enumerate_circuits_up_to(g, 3) if c.length == 3):
        step = _triangle_step(g, c)
        if step is not None:
            return step
    for c in (c for c in enumerate_circuits_up_to(g, 4) if c.length == 4):
        step = _four_cycle_step(g, c)
        if step is not None:
            return step
    return NO_SHORT_CIRCUIT


def _check_post(step: ReductionStep) -> ReductionStep:
    if bridges(step.post):
        raise BridgeCreated(f"{step.kind} produced a bridge")
    return step


def _two_cycle_step(g: CubicGraph, c: Circuit) -> ReductionStep | None:
    u, v = c.vertices
    p1, p2 = sorted(c.edge_ids)
    eu = next(e for e in g.incident(u) if e not in (p1, p2))
    ev = next(e for e in g.incident(v) if e not in (p1, p2))
    u2, v2 = g.other_end(eu, u), g.other_end(ev, v)
    if u2 in (u, v) or v2 in (u, v):
        return None  # triple edge; component is a theta, nothing to do
    if u2 == v2:
        raise BridgeCreated("2-cycle removal would create a loop (bridge upstream)")
    e_new = g.max_edge_id() + 1
    post = _derive(g, {u, v}, {e_new: (u2, v2)})
    cases = {
        frozenset((e_new,)): (eu, p1, ev),
        frozenset(): (p1, p2),
    }
    return _check_post(ReductionStep(
        kind="TwoCycle", pre=g, post=post, new_ids=frozenset((e_new,)),
        cases=cases, detail={"removed_vertices": [u, v]},
    ))


def _triangle_step(g: CubicGraph, c: Circuit) -> ReductionStep | None:
    u, v, w = c.vertices
    e_uv = g.edges_between(u, v)[0]
    e_vw = g.edges_between(v, w)[0]
    e_uw = g.edges_between(u, w)[0]
    tri = {e_uv, e_vw, e_uw}
    out = {}
    for x in (u, v, w):
        o = next(e for e in g.incident(x) if e not in tri)
        t = g.other_end(o, x)
        if t in (u, v, w):
            return None  # doubled triangle edge; 2-cycle pass handles it first
        out[x] = (o, t)
    z = max(g.vertices) + 1
    base = g.max_edge_id() + 1
    new = {x: base + i for i, x in enumerate((u, v, w))}
    post = _derive(g, {u, v, w}, {new[x]: (z, out[x][1]) for x in (u, v, w)})
    cases = {
        frozenset((new[u], new[v])): (out[u][0], e_uw, e_vw, out[v][0]),
        frozenset((new[u], new[w])): (out[u][0], e_uv, e_vw, out[w][0]),
        frozenset((new[v], new[w])): (out[v][0], e_uv, e_uw, out[w][0]),
    }
    return _check_post(ReductionStep(
        kind="Triangle", pre=g, post=post, new_ids=frozenset(new.values()),
        cases=cases, detail={"contracted": [u, v, w], "new_vertex": z},
    ))


def _four_cycle_step(g: CubicGraph, c: Circuit) -> ReductionStep | None:
    v1, v2, v3, v4 = c.vertices
    e12, e23, e34, e41 = c.edge_ids
    cyc_edges = set(c.edge_ids)
    o: dict[int, tuple[int, int]] = {}
    for x in (v1, v2, v3, v4):
        cand = [e for e in g.incident(x) if e not in cyc_edges]
        if len(cand) != 1:
            return None  # chorded or doubled 4-circuit; earlier passes own it
        o[x] = (cand[0], g.other_end(cand[0], x))
    w1, w2, w3, w4 = (o[x][1] for x in (v1, v2, v3, v4))
    if {w1, w2, w3, w4} & {v1, v2, v3, v4}:
        return None
    if w1 == w3 and w2 == w4:
        return _four_cycle_both(g, c, o)
    if w1 == w3 or w2 == w4:
        return _four_cycle_one_pair(g, c, o)
    if len({w1, w2, w3, w4}) != 4:
        # w1 == w2 (or similar adjacent coincidence) implies a triangle.
        return None
    return _four_cycle_disjoint(g, c, o)


def _four_cycle_both(g, c: Circuit, o) -> ReductionStep | None:
    v1, v2, v3, v4 = c.vertices
    e12, e23, e34, e41 = c.edge_ids
    w1 = o[v1][1]
    w2 = o[v2][1]
    deleted = {v1, v2, v3, v4, w1, w2}
    t1 = next(e for e in g.incident(w1) if e not in (o[v1][0], o[v3][0]))
    t2 = next(e for e in g.incident(w2) if e not in (o[v2][0], o[v4][0]))
    a, b = g.other_end(t1, w1), g.other_end(t2, w2)
    if a in deleted or b in deleted or a == b:
        return None  # the six vertices close up (K3,3-like); not reducible
    e_new = g.max_edge_id() + 1
    post = _derive(g, deleted, {e_new: (a, b)})
    cases = {
        frozenset((e_new,)): (t1, o[v1][0], e12, e23, e34, o[v4][0], t2),
        frozenset(): (o[v1][0], e12, o[v2][0], o[v4][0], e34, o[v3][0]),
    }
    return _check_post(ReductionStep(
        kind="FourCycle-both", pre=g, post=post, new_ids=frozenset((e_new,)),
        cases=cases, detail={"removed_vertices": sorted(deleted)},
    ))


def _four_cycle_one_pair(g, c: Circuit, o) -> ReductionStep:
    vs = list(c.vertices)
    es = list(c.edge_ids)
    if o[vs[0]][1] != o[vs[2]][1]:
        # Rotate so the identical pair sits on positions 1 and 3.
        vs = vs[1:] + vs[:1]
        es = es[1:] + es[:1]
    v1, v2, v3, v4 = vs
    e12, e23, e34, e41 = es
    w1 = o[v1][1]
    assert o[v3][1] == w1
    t = next(e for e in g.incident(w1) if e not in (o[v1][0], o[v3][0]))
    tv = g.other_end(t, w1)
    assert tv not in (v1, v2, v3, v4), "triangle should have been reduced first"
    z = max(g.vertices) + 1
    base = g.max_edge_id() + 1
    n_w2, n_w4, n_t = base, base + 1, base + 2
    post = _derive(
        g, {v1, v2, v3, v4, w1},
        {n_w2: (z, o[v2][1]), n_w4: (z, o[v4][1]), n_t: (z, tv)},
    )
    cases = {
        frozenset((n_w2, n_w4)): (o[v2][0], e12, o[v1][0], o[v3][0], e34, o[v4][0]),
        frozenset((n_w2, n_t)): (t, o[v1][0], e41, e34, e23, o[v2][0]),
        frozenset((n_w4, n_t)): (t, o[v1][0], e12, e23, e34, o[v4][0]),
    }
    return _check_post(ReductionStep(
        kind="FourCycle-w1w3", pre=g, post=post,
        new_ids=frozenset((n_w2, n_w4, n_t)), cases=cases,
        detail={"contracted": sorted({v1, v2, v3, v4, w1}), "new_vertex": z},
    ))


def _four_cycle_disjoint(g, c: Circuit, o) -> ReductionStep:
    v1, v2, v3, v4 = c.vertices
    e12, e23, e34, e41 = c.edge_ids
    w = {x: o[x][1] for x in c.vertices}
    base = g.max_edge_id() + 1
    ea, eb = base, base + 1

    def build(pairing: str) -> CubicGraph:
        if pairing == "w1w2|w3w4":
            adds = {ea: (w[v1], w[v2]), eb: (w[v3], w[v4])}
        else:
            adds = {ea: (w[v1], w[v4]), eb: (w[v2], w[v3])}
        return _derive(g, set(c.vertices), adds)

    for pairing in ("w1w2|w3w4", "w1w4|w2w3"):
        post = build(pairing)
        if bridges(post):
            continue
        if pairing == "w1w2|w3w4":
            cases = {
                frozenset((ea, eb)): (o[v1][0], e12, o[v2][0], o[v3][0], e34, o[v4][0]),
                frozenset((ea,)): (o[v1][0], e41, e34, e23, o[v2][0]),
                frozenset((eb,)): (o[v3][0], e23, e12, e41, o[v4][0]),
                frozenset(): (e12, e23, e34, e41),
            }
        else:
            cases = {
                frozenset((ea, eb)): (o[v1][0], e41, o[v4][0], o[v2][0], e23, o[v3][0]),
                frozenset((ea,)): (o[v1][0], e12, e23, e34, o[v4][0]),
                frozenset((eb,)): (o[v2][0], e12, e41, e34, o[v3][0]),
                frozenset(): (e12, e23, e34, e41),
            }
        return ReductionStep(
            kind="FourCycle-disjoint", pre=g, post=post,
            new_ids=frozenset((ea, eb)), cases=cases, choice_data=pairing,
            detail={"removed_vertices": list(c.vertices), "pairing": pairing},
        )
    raise BridgeCreated("both 4-circuit reconnections create a bridge")


# -- cut reduction ---------------------------------------------------------------


def _completion_two_cut(g: CubicGraph, side: frozenset[int], cut_ids: tuple[int, int],
                        virt_id: int) -> tuple[CubicGraph, tuple[int, int], tuple[int, int]]:
    """(completion graph, side endpoints, outer endpoints) for a 2-cut side."""
    inner = []
    outer = []
    for e in cut_ids:
        u, v = g.endpoints(e)
        inner.append(u if u in side else v)
        outer.append(v if u in side else u)
    assert inner[0] != inner[1], "2-cut edges share a side vertex (bridge upstream)"
    edges = {e: g.endpoints(e) for e in g.induced_edge_ids(side)}
    edges[virt_id] = (inner[0], inner[1])
    return CubicGraph(edges), (inner[0], inner[1]), (outer[0], outer[1])


def _completion_three_cut(g: CubicGraph, side: frozenset[int], cut_ids: tuple[int, int, int],
                          y: int, base_id: int) -> tuple[CubicGraph, list[int], list[int], dict[int, int]]:
    inner, outer = [], []
    for e in cut_ids:
        u, v = g.endpoints(e)
        inner.append(u if u in side else v)
        outer.append(v if u in side else u)
    assert len(set(inner)) == 3
    edges = {e: g.endpoints(e) for e in g.induced_edge_ids(side)}
    y_edge = {}
    for i, s in enumerate(inner):
        edges[base_id + i] = (y, s)
        y_edge[s] = base_id + i
    return CubicGraph(edges), inner, outer, y_edge


def reduce_cut_step(g: CubicGraph, k: int) -> ReductionStep | _Sentinel:
    """Detach the smallest colorable side of a 2- or 3-edge-cut.

    For k=3 only independent non-trivial minimal cuts qualify (the
    construction needs six distinct endpoints) and the graph must already
    have girth >= 5.  Returns NO_COLORABLE_CUT at the fixpoint where every
    candidate cut separates two uncolorable sides.
    """
    if k not in (2, 3):
        raise ValueError("k must be 2 or 3")
    if bridges(g):
        raise HasBridge("cut reduction requires a bridgeless graph")
    if k == 3 and girth(g) < 5:
        raise ValueError("3-cut reduction requires girth >= 5")
    cuts = [c for c in small_cuts(g, k) if c.size == k]
    if k == 3:
        cuts = [c for c in cuts if c.independent and not c.trivial]
    best: tuple[int, tuple[int, ...], Any] | None = None
    for cut in cuts:
        all_vs = frozenset(g.vertices)
        for side in (cut.side_small, all_vs - cut.side_small):
            ids = tuple(sorted(cut.edge_ids))
            if k == 2:
                comp, inner, outer = _completion_two_cut(g, side, ids, g.max_edge_id() + 1)
            else:
                comp, inner, outer, _ = _completion_three_cut(
                    g, side, ids, max(g.vertices) + 1, g.max_edge_id() + 1)
            col = three_edge_color(comp)
            if col is UNCOLORABLE:
                continue
            key = (len(side), tuple(sorted(side)))
            if best is None or key < best[:2]:
                best = (*key, (cut, side, ids))
    if best is None:
        return NO_COLORABLE_CUT
    cut, side, ids = best[2]
    if k == 2:
        return _two_cut_step(g, side, ids)
    return _three_cut_step(g, side, ids)


def _two_cut_step(g: CubicGraph, side: frozenset[int], ids: tuple[int, int]) -> ReductionStep:
    virt = g.max_edge_id() + 1
    comp, (v1, w1), (v2, w2) = _completion_two_cut(g, side, ids, virt)
    assert not g.has_edge(v1, w1), "side endpoints adjacent despite minimal cut choice"
    col = three_edge_color(comp)
    assert col is not UNCOLORABLE
    e2_new = virt + 1
    post = _derive(g, set(side), {e2_new: (v2, w2)})
    alpha = col.color(virt)
    beta = min(c for c in (0, 1, 2) if c != alpha)
    side_ids = [e for e in comp.edge_ids if e != virt]
    even_factor = tuple(e for e in side_ids if col.color(e) != alpha)
    through = tuple(ids) + tuple(
        e for e in side_ids if col.color(e) in (alpha, beta)
    )
    cases = {
        frozenset(): even_factor,
        frozenset((e2_new,)): through,
    }
    return ReductionStep(
        kind="TwoCut", pre=g, post=post, new_ids=frozenset((e2_new,)),
        cases=cases, side_coloring=col,
        detail={"cut_edges": list(ids), "side_size": len(side)},
    )


def _three_cut_step(g: CubicGraph, side: frozenset[int], ids: tuple[int, int, int]) -> ReductionStep:
    y1 = max(g.vertices) + 1
    y2 = y1 + 1
    base = g.max_edge_id() + 1
    comp, inner, outer, y_edge = _completion_three_cut(g, side, ids, y1, base)
    for i in range(3):
        for j in range(i + 1, 3):
            assert not g.has_edge(inner[i], inner[j]), \
                "3-cut side endpoints adjacent despite girth/cut choice"
    col = three_edge_color(comp)
    assert col is not UNCOLORABLE
    new_base = base + 3
    new_by_cut = {ids[i]: new_base + i for i in range(3)}
    post = _derive(
        g, set(side),
        {new_base + i: (y2, outer[i]) for i in range(3)},
    )
    side_ids = [e for e in comp.edge_ids if e not in y_edge.values()]
    cases = {}
    for unused in range(3):
        alpha = col.color(y_edge[inner[unused]])
        used = [i for i in range(3) if i != unused]
        add = tuple(ids[i] for i in used) + tuple(
            e for e in side_ids if col.color(e) != alpha
        )
        cases[frozenset(new_by_cut[ids[i]] for i in used)] = add
    return ReductionStep(
        kind="ThreeCut", pre=g, post=post,
        new_ids=frozenset(new_by_cut.values()), cases=cases, side_coloring=col,
        detail={"cut_edges": list(ids), "side_size": len(side)},
    )


# -- pipeline ----------------------------------------------------------------------


def full_reduce(g: CubicGraph) -> ReductionTrace:
    """Reduce to a fixpoint: girth >= 5 and no colorable small-cut sides.

    Precondition: g is bridgeless and not 3-edge-colorable (colorable inputs
    bypass reduction in the solvers).  Terminal flags: Petersen when the
    fixpoint is the Petersen graph, Colorable when a step exposed a colorable
    graph, Generic otherwise.
    """
    if bridges(g):
        raise HasBridge("full_reduce requires a bridgeless graph")
    steps: list[ReductionStep] = []
    cur = g
    while True:
        if cur.n >= 4 and girth(cur) <= 4:
            res = reduce_girth_step(cur)
            if res is not NO_SHORT_CIRCUIT:
                assert res.post.n < cur.n
                steps.append(res)
                cur = res.post
                continue
        res = reduce_cut_step(cur, 2)
        if res is not NO_COLORABLE_CUT:
            assert res.post.n < cur.n
            steps.append(res)
            cur = res.post
            continue
        if girth(cur) >= 5:
            res = reduce_cut_step(cur, 3)
            if res is not NO_COLORABLE_CUT:
                assert res.post.n < cur.n
                steps.append(res)
                cur = res.post
                continue
        break
    if is_petersen(cur):
        flag = TERMINAL_PETERSEN
    elif steps and three_edge_color(cur) is not UNCOLORABLE:
        # Defensive: the reductions keep intermediates uncolorable, so this only
        # fires when the precondition was violated upstream.
        flag = TERMINAL_COLORABLE
    else:
        flag = TERMINAL_GENERIC
    return ReductionTrace(original=g, reduced=cur, steps=tuple(steps), terminal_flag=flag)


def lift_two_factor(trace: ReductionTrace, factor: TwoFactor) -> TwoFactor:
    """Map a 2-factor of the reduced graph to one of the original graph.

    The lifted factor has no 3-circuits and at most as many 5-circuits; both
    are asserted per step.
    """
    current = two_factor_from_edges(trace.reduced, factor.edge_ids)
    edges = set(current.edge_ids)
    count5 = current.count5
    out = current
    for step in reversed(trace.steps):
        edges = step.lift_edges(edges)
        out = two_factor_from_edges(step.pre, frozenset(edges))
        assert out.count3 == 0, f"{step.kind} lift created a triangle"
        assert out.count5 <= count5, f"{step.kind} lift increased the 5-count"
        count5 = out.count5
    return out
