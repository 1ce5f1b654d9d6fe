"""Batch verification over graph files and generator specs, plus the exact
enumeration oracle for oddness and 5-cyclicity."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Iterator

from .connectivity import bridges, cyclic_edge_connectivity
from .coloring import UNCOLORABLE, three_edge_color
from .errors import CapExceeded, NotDefined, UnclassifiableP3b
from .factors import complement_two_factor
from .families import gen_chain_family, gen_p3_ring, gen_petersen, simple_cubic_census
from .formats import parse_graph
from .graphs import CubicGraph, girth
from .matching import enumerate_perfect_matchings
from .solver import graph_id, solve_5cyc, solve_oddness

ORACLE_DEFAULT_CAP = 24


def oracle_exact(g: CubicGraph, cap: int = ORACLE_DEFAULT_CAP) -> tuple[int, int]:
    """(5-cyclicity, oddness) by exhaustive perfect-matching enumeration."""
    if g.n > cap:
        raise CapExceeded(f"oracle limited to n <= {cap}, got n = {g.n}")
    best5 = None
    bestodd = None
    for m in enumerate_perfect_matchings(g):
        f = complement_two_factor(g, m)
        best5 = f.count5 if best5 is None else min(best5, f.count5)
        bestodd = f.odd_count if bestodd is None else min(bestodd, f.odd_count)
    if best5 is None:
        raise CapExceeded("graph has no perfect matching")
    return best5, bestodd


@dataclass
class BatchRow:
    graph_id: str
    index: int
    n: int
    status: str = "ok"  # ok | skipped
    reason: str | None = None
    colorable: bool | None = None
    girth: int | None = None
    cyclic_connectivity: int | None = None
    census: list | None = None
    achieved5: int | None = None
    bound5: int | None = None
    k_odd: int | None = None
    bound_odd: int | None = None
    odd_note: str | None = None
    oracle_w5: int | None = None
    oracle_w: int | None = None
    flags: list[str] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)
    millis: int | None = None

    def to_json(self) -> dict[str, Any]:
        return {k: v for k, v in self.__dict__.items() if v is not None and v != []}


@dataclass
class BatchReport:
    rows: list[BatchRow]
    modes: tuple[str, ...]
    summary: dict[str, Any]

    def to_json(self) -> dict[str, Any]:
        return {
            "schema": "pentafactor.batch/1",
            "modes": list(self.modes),
            "rows": [r.to_json() for r in self.rows],
            "summary": self.summary,
        }

    @property
    def has_violation(self) -> bool:
        return any(r.violations for r in self.rows)


def parse_generator_spec(spec: str) -> list[CubicGraph]:
    """Generator specs: petersen | chain:A[..B] | p3ring:A[..B] | census:N."""
    name, _, arg = spec.partition(":")
    if name == "petersen":
        return [gen_petersen()]
    lo, _, hi = arg.partition("..")
    if name == "chain":
        lo_i = int(lo)
        hi_i = int(hi) if hi else lo_i
        return [gen_chain_family(k) for k in range(lo_i, hi_i + 1)]
    if name == "p3ring":
        lo_i = int(lo)
        hi_i = int(hi) if hi else lo_i
        return [gen_p3_ring(c) for c in range(lo_i, hi_i + 1) if c % 2 == 0]
    if name == "census":
        return simple_cubic_census(int(lo))
    raise ValueError(f"unknown generator spec {spec!r}")


def load_graphs(lines: Iterable[str]) -> Iterator[tuple[int, CubicGraph | Exception]]:
    """Parse one graph per line (graph6/sparse6) or one cubicmg block."""
    buffered = [ln.rstrip("\n") for ln in lines]
    text = "\n".join(buffered).strip()
    if text.startswith("cubicmg"):
        # cubicmg blocks are separated by header lines.
        block: list[str] = []
        idx = 0
        for ln in buffered + ["cubicmg"]:
            if ln.strip().startswith("cubicmg") and block:
                try:
                    yield idx, parse_graph("\n".join(block))
                except Exception as exc:
                    yield idx, exc
                idx += 1
                block = []
            if ln.strip():
                block.append(ln)
        return
    idx = 0
    for ln in buffered:
        s = ln.strip()
        if not s:
            continue
        try:
            yield idx, parse_graph(s)
        except Exception as exc:
            yield idx, exc
        idx += 1


def batch_run(
    graphs: Iterable[tuple[int, CubicGraph | Exception]],
    modes: Iterable[str] = ("five",),
    oracle_cap: int = ORACLE_DEFAULT_CAP,
    include_timings: bool = False,
) -> BatchReport:
    """Run the requested pipelines per graph and aggregate bound checks.

    Non-cubic or bridged inputs become skipped rows, never fatal.  Reports
    are deterministic for identical input; timings are opt-in because they
    break byte-identical output.
    """
    mode_set: set[str] = set()
    for m in modes:
        if m == "both":
            mode_set |= {"five", "odd"}
        elif m in ("five", "odd", "oracle"):
            mode_set.add(m)
        else:
            raise ValueError(f"unknown mode {m!r}")
    rows: list[BatchRow] = []
    for idx, item in graphs:
        t0 = time.monotonic()
        if isinstance(item, Exception):
            rows.append(BatchRow(
                graph_id="-", index=idx, n=0, status="skipped",
                reason=f"{type(item).__name__}: {item}",
            ))
            continue
        g = item
        row = BatchRow(graph_id=graph_id(g), index=idx, n=g.n)
        if bridges(g):
            row.status = "skipped"
            row.reason = "has bridge"
            rows.append(row)
            continue
        row.girth = girth(g)
        try:
            row.cyclic_connectivity = cyclic_edge_connectivity(g)
        except NotDefined:
            row.cyclic_connectivity = None
        row.colorable = three_edge_color(g) is not UNCOLORABLE
        if "five" in mode_set:
            factor, cert = solve_5cyc(g)
            row.achieved5 = cert.achieved
            row.bound5 = cert.bound_floor
            row.census = list(cert.census) if cert.census else None
            row.flags.extend(sorted(cert.flags))
            if "exceptional" not in cert.flags and cert.achieved > cert.bound_floor:
                row.violations.append("five-circuit bound")
            if factor.count3 != 0:
                row.violations.append("triangle in 2-factor")
        if "odd" in mode_set:
            try:
                factor, cert = solve_oddness(g)
                row.k_odd = cert.achieved
                row.bound_odd = cert.bound_floor
                if "exceptional" not in cert.flags and cert.achieved > cert.bound_floor:
                    row.violations.append("oddness bound")
            except UnclassifiableP3b as exc:
                row.odd_note = f"UnclassifiableP3b: {exc}"
        if "oracle" in mode_set and g.n <= oracle_cap:
            w5, w = oracle_exact(g, cap=oracle_cap)
            row.oracle_w5 = w5
            row.oracle_w = w
            if row.achieved5 is not None and w5 > row.achieved5:
                row.violations.append("oracle exceeds solver 5-count")
        if include_timings:
            row.millis = int((time.monotonic() - t0) * 1000)
        rows.append(row)
    summary = {
        "graphs": len(rows),
        "skipped": sum(1 for r in rows if r.status == "skipped"),
        "violations": sum(len(r.violations) for r in rows),
        "max_n": max((r.n for r in rows), default=0),
    }
    return BatchReport(rows=rows, modes=tuple(sorted(mode_set)), summary=summary)


def nine_over_n_check(g: CubicGraph) -> dict[str, Any] | None:
    """Empirical n/9 report for 3-edge-connected girth-5 inputs without
    3-edge-cuts separating colorable subgraphs; no certificate is issued,
    only the observed comparison."""
    from .connectivity import small_cuts
    from .reductions import NO_COLORABLE_CUT, reduce_cut_step

    if girth(g) != 5 or bridges(g) or small_cuts(g, 2):
        return None
    if reduce_cut_step(g, 3) is not NO_COLORABLE_CUT:
        return None
    factor, cert = solve_5cyc(g)
    bound = math.floor(Fraction(g.n, 9))
    return {"n": g.n, "achieved": cert.achieved, "floor_n_over_9": bound,
            "holds": cert.achieved <= bound}
