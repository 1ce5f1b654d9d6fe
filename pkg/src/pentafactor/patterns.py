"""Petersen-derived patterns P1/P2/P3: search, classification, boundary edges.

P1 is the Petersen graph minus an edge, P2 the Petersen graph with an edge
subdivided twice, P3 the Petersen graph minus a vertex.  Occurrences are
counted as subgraphs: identity is the host edge set, so pattern automorphisms
collapse.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from typing import Callable, Iterable, Sequence

from .errors import OverlapViolation, UnclassifiableP3b
from .graphs import Circuit, MultiGraph, PatternGraph, PETERSEN_EDGES

KINDS = ("P1", "P2", "P3")

P1_CLASS = "P1-class"
P2_CLASS = "P2-class"
P3A = "P3a"
P3B1 = "P3b1"
P3B2 = "P3b2"
UNCLASSIFIED = "unclassified"


def pattern_graph(kind: str) -> PatternGraph:
    base = list(PETERSEN_EDGES)
    if kind == "P1":
        base.remove((0, 1))
        return PatternGraph(base)
    if kind == "P2":
        base.remove((0, 1))
        base += [(0, 10), (10, 11), (11, 1)]
        return PatternGraph(base)
    if kind == "P3":
        return PatternGraph([e for e in base if 0 not in e])
    raise ValueError(f"unknown pattern kind {kind!r}")


@dataclass(frozen=True)
class PatternOccurrence:
    kind: str
    vertex_map: tuple[tuple[int, int], ...]  # (pattern vertex, host vertex)
    edge_set: frozenset[int]
    boundary: tuple[int, ...]
    class_tag: str = UNCLASSIFIED
    e_S: int | None = None
    E_S: frozenset[int] | None = None

    @property
    def host_vertices(self) -> frozenset[int]:
        return frozenset(h for _, h in self.vertex_map)

    @property
    def inner_vertices(self) -> frozenset[int]:
        """Host images of pattern vertices of degree 3."""
        pat = pattern_graph(self.kind)
        return frozenset(h for p, h in self.vertex_map if pat.degree(p) == 3)

    @property
    def degree2_images(self) -> tuple[int, ...]:
        pat = pattern_graph(self.kind)
        return tuple(h for p, h in self.vertex_map if pat.degree(p) == 2)


def find_occurrences(g: MultiGraph, kind: str) -> list[PatternOccurrence]:
    """All subgraph embeddings of the pattern, deduplicated by host edge set."""
    pat = pattern_graph(kind)
    order = _search_order(pat)
    found: dict[frozenset[int], PatternOccurrence] = {}

    pverts = pat.vertices
    host_vs = g.vertices

    def extend(i: int, vmap: dict[int, int], used_v: set[int],
               emap: dict[int, int], used_e: set[int]) -> None:
        if i == len(order):
            eset = frozenset(used_e)
            if eset not in found:
                found[eset] = PatternOccurrence(
                    kind=kind,
                    vertex_map=tuple(sorted(vmap.items())),
                    edge_set=eset,
                    boundary=tuple(sorted(g.boundary_edge_ids(set(vmap.values())))),
                )
            return
        p = order[i]
        anchors = [q for q in pat.neighbors(p) if q in vmap]
        if not anchors:
            candidates: Iterable[int] = host_vs
        else:
            candidates = g.neighbors(vmap[anchors[0]])
        for h in candidates:
            if h in used_v:
                continue
            # Each mapped pattern edge at p needs its own free host edge.
            ok = True
            pending: list[tuple[int, tuple[int, ...]]] = []
            for pe in pat.incident(p):
                q = pat.other_end(pe, p)
                if q not in vmap:
                    continue
                options = tuple(e for e in g.edges_between(h, vmap[q]) if e not in used_e)
                if not options:
                    ok = False
                    break
                pending.append((pe, options))
            if not ok:
                continue
            vmap[p] = h
            used_v.add(h)
            for combo in itertools.product(*(opts for _, opts in pending)):
                if len(set(combo)) != len(combo):
                    continue
                for (pe, _), he in zip(pending, combo):
                    emap[pe] = he
                    used_e.add(he)
                extend(i + 1, vmap, used_v, emap, used_e)
                for (pe, _), he in zip(pending, combo):
                    del emap[pe]
                    used_e.discard(he)
            del vmap[p]
            used_v.discard(h)

    extend(0, {}, set(), {}, set())
    return sorted(found.values(), key=lambda o: tuple(sorted(o.edge_set)))


def _search_order(pat: PatternGraph) -> list[int]:
    """Connected search order anchored at a degree-2 pattern vertex."""
    start = pat.degree2_vertices[0]
    order = [start]
    seen = {start}
    while len(order) < pat.n:
        best = None
        for v in pat.vertices:
            if v in seen:
                continue
            links = sum(1 for q in pat.neighbors(v) if q in seen)
            if links == 0:
                continue
            key = (-links, -pat.degree(v), v)
            if best is None or key < best[0]:
                best = (key, v)
        assert best is not None, "pattern must be connected"
        order.append(best[1])
        seen.add(best[1])
    return order


@dataclass(frozen=True)
class Census:
    """Classified occurrence sets, per pipeline mode."""

    mode: str  # "oddness" or "fivecyc"
    p1: tuple[PatternOccurrence, ...]   # P1-class (all P1s in fivecyc mode)
    p2: tuple[PatternOccurrence, ...]
    p3: tuple[PatternOccurrence, ...]
    exception_22: bool = False

    @property
    def occurrences(self) -> tuple[PatternOccurrence, ...]:
        return self.p1 + self.p2 + self.p3

    def p3_split(self) -> tuple[list[PatternOccurrence], list[PatternOccurrence]]:
        p3a = [o for o in self.p3 if o.class_tag == P3A]
        p3b = [o for o in self.p3 if o.class_tag in (P3B1, P3B2)]
        return p3a, p3b


def classify_occurrences(
    g: MultiGraph,
    p1_occs: Sequence[PatternOccurrence],
    p2_occs: Sequence[PatternOccurrence],
    p3_occs: Sequence[PatternOccurrence],
    mode: str = "oddness",
    enforce_disjoint: bool = False,
) -> Census:
    """Build the classified occurrence set for one of the two pipelines.

    oddness: P2 = all P2 occurrences, P1 = P1 occurrences not extendable to a
    P2 occurrence, P3 = P3 occurrences not extendable to a P1 occurrence.
    fivecyc: all P1 occurrences count (no P2 filtering) and P2s are ignored.

    Extendability is edge-set inclusion in an occurrence of the larger kind.
    With enforce_disjoint, pairwise disjointness is checked: any vertex
    overlap raises OverlapViolation, except two P2 occurrences on a 22-vertex
    host sharing exactly two vertices and one edge, which is surfaced via the
    exception_22 flag.
    """
    if mode not in ("oddness", "fivecyc"):
        raise ValueError("mode must be 'oddness' or 'fivecyc'")
    p3 = tuple(
        replace(o, class_tag=UNCLASSIFIED)
        for o in p3_occs
        if not any(o.edge_set <= p.edge_set for p in p1_occs)
    )
    if mode == "fivecyc":
        p1 = tuple(replace(o, class_tag=P1_CLASS) for o in p1_occs)
        census = Census("fivecyc", p1, (), p3)
    else:
        p1 = tuple(
            replace(o, class_tag=P1_CLASS)
            for o in p1_occs
            if not any(o.edge_set <= p.edge_set for p in p2_occs)
        )
        p2 = tuple(replace(o, class_tag=P2_CLASS) for o in p2_occs)
        census = Census("oddness", p1, p2, p3)
    if enforce_disjoint:
        census = _check_disjoint(g, census)
    return census


def _check_disjoint(g: MultiGraph, census: Census) -> Census:
    occs = census.occurrences
    offending = [
        (a, b)
        for a, b in itertools.combinations(occs, 2)
        if a.host_vertices & b.host_vertices
    ]
    if not offending:
        return census
    for a, b in offending:
        is_exception = (
            g.n == 22
            and a.kind == "P2"
            and b.kind == "P2"
            and len(a.host_vertices & b.host_vertices) == 2
            and len(a.edge_set & b.edge_set) == 1
        )
        if not is_exception:
            raise OverlapViolation(
                f"occurrences overlap: {sorted(a.host_vertices & b.host_vertices)}"
            )
    return replace(census, exception_22=True)


def select_boundary_edges(
    g: MultiGraph,
    occ: PatternOccurrence,
    circuits: Sequence[Circuit],
    matcher: Callable[[Circuit], bool],
    census: Census,
) -> PatternOccurrence:
    """Fill e_S / E_S and finish the class tag of one occurrence.

    For P1/P2 occurrences e_S is the smallest boundary edge id.  For P3
    occurrences E_S is the lexicographically smallest boundary pair such that
    (1) the pair does not lie on a common 7-circuit that goes through the
    occurrence and can be contained in a 2-factor of g, and (2) the pair does
    not lie on a common 9-circuit through the occurrence and another
    classified occurrence.  Without such a pair the occurrence is P3b and the
    configuration (common vertex for all three outside neighbors, or distinct
    common neighbors per pair) decides P3b1/P3b2.

    ``circuits`` must include every circuit of length <= 9 through the
    occurrence; ``matcher`` decides 2-factor containment of a circuit.
    """
    if occ.kind in ("P1", "P2"):
        assert occ.boundary, "boundary must be nonempty on proper hosts"
        return replace(occ, e_S=min(occ.boundary))

    assert occ.kind == "P3"
    assert len(occ.boundary) == 3, "P3 occurrence must have 3 boundary edges"
    through = [c for c in circuits if _goes_through(c, occ)]
    others = [o for o in census.occurrences if o.edge_set != occ.edge_set]
    for pair in itertools.combinations(sorted(occ.boundary), 2):
        pset = set(pair)
        bad = False
        for c in through:
            if not pset <= c.edge_set:
                continue
            if c.length == 7 and matcher(c):
                bad = True
                break
            if c.length == 9 and any(_goes_through(c, o) for o in others):
                bad = True
                break
        if not bad:
            return replace(occ, class_tag=P3A, E_S=frozenset(pair))

    return _classify_p3b(g, occ)


def _goes_through(c: Circuit, occ: PatternOccurrence) -> bool:
    """A circuit goes through an occurrence if they share at least 2 edges."""
    return len(c.edge_set & occ.edge_set) >= 2


def circuit_intersects(c: Circuit, occ: PatternOccurrence) -> bool:
    """Weaker predicate: sharing at least one vertex."""
    return bool(c.vertex_set & occ.host_vertices)


goes_through = _goes_through


def _classify_p3b(g: MultiGraph, occ: PatternOccurrence) -> PatternOccurrence:
    w: list[int] = []
    for v in occ.degree2_images:
        outside = [e for e in g.incident(v) if e in occ.boundary]
        assert len(outside) == 1
        w.append(g.other_end(outside[0], v))
    if len(set(w)) != 3:
        raise UnclassifiableP3b(
            "outside neighbours of a classified P3 occurrence must be distinct"
        )
    w1, w2, w3 = w
    common_all = set(g.neighbors(w1)) & set(g.neighbors(w2)) & set(g.neighbors(w3))
    if common_all:
        return replace(occ, class_tag=P3B1, E_S=frozenset())
    wset = set(w)
    pair_commons = []
    for a, b in itertools.combinations(w, 2):
        commons = (set(g.neighbors(a)) & set(g.neighbors(b))) - wset
        pair_commons.append(sorted(commons))
    for combo in itertools.product(*pair_commons):
        if len(set(combo)) == 3:
            return replace(occ, class_tag=P3B2, E_S=frozenset())
    raise UnclassifiableP3b(
        "P3 occurrence without admissible pair matches neither boundary "
        "configuration; host violates the reduced-graph preconditions"
    )
