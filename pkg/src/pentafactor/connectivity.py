"""Bridges, small edge-cuts, the edge sets E2/E3, and cyclic edge connectivity."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import HasBridge, NotDefined
from .graphs import (
    MultiGraph,
    connected_components,
    enumerate_circuits_up_to,
    girth,
    is_connected,
)


def _bridges_core(
    g: MultiGraph, skip: frozenset[int], root: int, disc: dict[int, int]
) -> list[int]:
    """Bridges of the component of ``root`` in g minus the skipped edges.

    Iterative Tarjan low-link pass; entry edges are tracked by id so parallel
    edges never count as bridges.  ``disc`` accumulates visited vertices
    across calls.
    """
    low: dict[int, int] = {}
    out: list[int] = []
    disc[root] = low[root] = len(disc)
    stack = [(root, -1, iter(g.incident(root)))]
    while stack:
        v, via, it = stack[-1]
        lv = low[v]
        dived = False
        for e in it:
            if e == via or e in skip:
                continue
            w = g.other_end(e, v)
            dw = disc.get(w)
            if dw is None:
                disc[w] = low[w] = len(disc)
                stack.append((w, e, iter(g.incident(w))))
                dived = True
                break
            if dw < lv:
                lv = low[v] = dw
        if dived:
            continue
        low[v] = lv
        stack.pop()
        if stack:
            pv = stack[-1][0]
            if lv < low[pv]:
                low[pv] = lv
            if lv > disc[pv]:
                out.append(via)
    return out


def bridges(g: MultiGraph) -> list[int]:
    """All bridge edge-ids (empty iff g is 2-edge-connected)."""
    disc: dict[int, int] = {}
    out: list[int] = []
    for root in g.vertices:
        if root not in disc:
            out.extend(_bridges_core(g, frozenset(), root, disc))
    return sorted(out)


def bridges_skipping(g: MultiGraph, skip: frozenset[int]) -> list[int] | None:
    """Bridges of g minus the skipped edges; None when that graph is
    disconnected (assuming g itself is connected)."""
    disc: dict[int, int] = {}
    out = _bridges_core(g, skip, g.vertices[0], disc)
    if len(disc) != g.n:
        return None
    return sorted(out)


@dataclass(frozen=True)
class EdgeCut:
    """A minimal edge-cut of size <= 3 with its smaller side."""

    edge_ids: frozenset[int]
    side_small: frozenset[int]
    trivial: bool
    independent: bool

    @property
    def size(self) -> int:
        return len(self.edge_ids)


def _cut_record(g: MultiGraph, ids: frozenset[int]) -> EdgeCut:
    comps = connected_components(g, removed_edges=ids)
    assert len(comps) == 2, "minimal cut must leave exactly two components"
    small = min(comps, key=lambda c: (len(c), tuple(sorted(c))))
    endpoints = [g.endpoints(e) for e in ids]
    verts = [v for uv in endpoints for v in uv]
    independent = len(set(verts)) == 2 * len(ids)
    trivial = len(ids) == 3 and len(small) == 1
    return EdgeCut(ids, frozenset(small), trivial, independent)


def small_cuts(g: MultiGraph, k: int) -> list[EdgeCut]:
    """All minimal edge-cuts of size <= k (k in {2, 3}) of a bridgeless graph.

    A pair {e, f} is a 2-cut iff f is a bridge of g - e; triples are found the
    same way one level deeper and kept only when no pair inside them already
    disconnects.
    """
    if k not in (2, 3):
        raise ValueError("k must be 2 or 3")
    if bridges(g):
        raise HasBridge("small_cuts requires a bridgeless graph")
    ids = list(g.edge_ids)
    pair_cuts: set[frozenset[int]] = set()
    for e in ids:
        for f in bridges_skipping(g, frozenset((e,))) or ():
            pair_cuts.add(frozenset((e, f)))
    cuts = set(pair_cuts)
    if k == 3:
        for e, f in itertools.combinations(ids, 2):
            if frozenset((e, f)) in pair_cuts:
                continue
            for h in bridges_skipping(g, frozenset((e, f))) or ():
                triple = frozenset((e, f, h))
                if any(frozenset(p) in pair_cuts for p in itertools.combinations(triple, 2)):
                    continue
                cuts.add(triple)
    records = [_cut_record(g, c) for c in cuts]
    records.sort(key=lambda c: (c.size, tuple(sorted(c.edge_ids))))
    return records


def edges_in_small_cuts(g: MultiGraph) -> tuple[frozenset[int], frozenset[int]]:
    """(E2, E3): edges in some 2-edge-cut, and edges in some minimal
    independent-edge cut of size <= 3."""
    cuts = small_cuts(g, 3)
    e2 = frozenset(e for c in cuts if c.size == 2 for e in c.edge_ids)
    e3 = frozenset(e for c in cuts if c.independent for e in c.edge_ids)
    return e2, e3


def cyclic_edge_connectivity(g: MultiGraph) -> int:
    """Minimum size of an edge-cut separating two components that each
    contain a circuit.

    Exact via max-flow between pairs of vertex-disjoint chordless circuits of
    length <= 9; raises NotDefined below n = 8 where the notion degenerates.
    On every graph this package targets, each side of an optimal cut contains
    such a short circuit (cross-checked against an exhaustive oracle in the
    test suite).
    """
    if g.n < 8:
        raise NotDefined(f"cyclic edge connectivity undefined for n={g.n}")
    if not is_connected(g):
        raise NotDefined("graph must be connected")
    circuits = [c for c in enumerate_circuits_up_to(g, 9) if _is_chordless(g, c.vertex_set)]
    if girth(g) > 9:
        raise NotDefined("cyclic edge connectivity supported only for girth <= 9")
    # Distinct vertex sets suffice; the flow only sees the sets.
    vertex_sets = sorted({c.vertex_set for c in circuits}, key=sorted)
    best: int | None = None
    for a, b in itertools.combinations(vertex_sets, 2):
        if a & b:
            continue
        flow = _min_edge_cut_between(g, a, b, stop_at=best)
        if best is None or flow < best:
            best = flow
            if best == 1:
                break
    if best is None:
        raise NotDefined("no two vertex-disjoint circuits exist")
    return best


def _is_chordless(g: MultiGraph, vs: frozenset[int]) -> bool:
    return len(g.induced_edge_ids(vs)) == len(vs)


def _min_edge_cut_between(
    g: MultiGraph, side_a: frozenset[int], side_b: frozenset[int], stop_at: int | None
) -> int:
    """Unit-capacity max-flow between two contracted vertex sets.

    Stops early once the flow reaches ``stop_at`` since larger values cannot
    improve the caller's minimum.
    """
    contract: dict[int, int] = {}
    for v in g.vertices:
        contract[v] = -1 if v in side_a else (-2 if v in side_b else v)
    # Residual as per-edge direction flags; BFS augmentation.
    used: dict[int, int] = {e: 0 for e in g.edge_ids}  # -1/0/+1 flow along sorted order
    flow = 0
    while stop_at is None or flow < stop_at:
        parent: dict[int, tuple[int, int, int]] = {}
        seen = {-1}
        queue = [-1]
        reached = False
        while queue and not reached:
            x = queue.pop(0)
            verts = side_a if x == -1 else (side_b if x == -2 else (x,))
            for v in verts:
                for e in g.incident(v):
                    w = contract[g.other_end(e, v)]
                    u, _ = g.endpoints(e)
                    direction = 1 if v == u else -1
                    if used[e] * direction >= 1:
                        continue  # saturated in this direction
                    if w in seen:
                        continue
                    seen.add(w)
                    parent[w] = (x, e, direction)
                    if w == -2:
                        reached = True
                        break
                    queue.append(w)
                if reached:
                    break
        if not reached:
            break
        x = -2
        while x != -1:
            px, e, direction = parent[x]
            used[e] += direction
            x = px
        flow += 1
    return flow
