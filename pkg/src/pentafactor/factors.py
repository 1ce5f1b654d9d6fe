"""2-factors: circuit decompositions of spanning 2-regular edge sets.

The invariant I sums (7 - |C|_o)/2 over circuits, where |C|_o is the length
for odd circuits and length + 7 for even ones; it ties circuit lengths to the
odd-circuit count through I = 7k/2 - n/2, which the constructor asserts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidFactor
from .graphs import Circuit, MultiGraph


@dataclass(frozen=True)
class TwoFactor:
    circuits: tuple[Circuit, ...]
    edge_ids: frozenset[int]
    n: int
    invariant_I: Fraction = field(compare=False)

    @property
    def odd_count(self) -> int:
        return sum(1 for c in self.circuits if c.is_odd)

    @property
    def count5(self) -> int:
        return sum(1 for c in self.circuits if c.length == 5)

    @property
    def count3(self) -> int:
        return sum(1 for c in self.circuits if c.length == 3)

    def length_counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for c in self.circuits:
            out[c.length] = out.get(c.length, 0) + 1
        return dict(sorted(out.items()))


def _odd_length(c: Circuit) -> int:
    return c.length if c.is_odd else c.length + 7


def two_factor_from_edges(g: MultiGraph, edge_ids: frozenset[int]) -> TwoFactor:
    """Decompose a spanning 2-regular edge subset into circuits."""
    incident: dict[int, list[int]] = {v: [] for v in g.vertices}
    for e in edge_ids:
        if e not in set(g.edge_ids):
            raise InvalidFactor(f"edge {e} not in graph")
        u, v = g.endpoints(e)
        incident[u].append(e)
        incident[v].append(e)
    bad = [v for v, inc in incident.items() if len(inc) != 2]
    if bad:
        raise InvalidFactor(f"vertices without degree 2 in factor: {sorted(bad)[:5]}")

    unused = set(edge_ids)
    circuits: list[Circuit] = []
    for start in g.vertices:
        inc = [e for e in incident[start] if e in unused]
        if not inc:
            continue
        walk_v = [start]
        walk_e: list[int] = []
        v = start
        prev: int | None = None
        while True:
            nxt = next(e for e in incident[v] if e in unused and e != prev)
            unused.discard(nxt)
            walk_e.append(nxt)
            v = g.other_end(nxt, v)
            prev = nxt
            if v == start:
                break
            walk_v.append(v)
        circuits.append(Circuit.from_walk(walk_v, walk_e))
    circuits.sort(key=lambda c: (c.length, c.vertices, c.edge_ids))

    inv = sum((Fraction(7 - _odd_length(c), 2) for c in circuits), Fraction(0))
    k = sum(1 for c in circuits if c.is_odd)
    assert inv == Fraction(7 * k, 2) - Fraction(g.n, 2), "I(M) identity violated"
    return TwoFactor(tuple(circuits), frozenset(edge_ids), g.n, inv)


def complement_two_factor(g: MultiGraph, matching: frozenset[int]) -> TwoFactor:
    """The 2-factor complementary to a perfect matching of a cubic graph."""
    cover: dict[int, int] = {}
    for e in matching:
        u, v = g.endpoints(e)
        cover[u] = cover.get(u, 0) + 1
        cover[v] = cover.get(v, 0) + 1
    if len(cover) != g.n or any(c != 1 for c in cover.values()):
        raise InvalidFactor("edge set is not a perfect matching")
    return two_factor_from_edges(g, frozenset(g.edge_ids) - matching)
