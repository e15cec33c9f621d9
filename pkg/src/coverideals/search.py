"""Batch sweeps over small labelled graphs: build the order-t cover ideal of
every graph in range and record its componentwise-linearity verdict.

Rows are emitted in a fixed enumeration order (vertex count, then edge-set
bitmask), so two runs of the same sweep are byte-identical apart from wall
times.  The summary deduplicates failing graphs up to relabelling.
"""

from __future__ import annotations

import json
import signal
import time
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator, Optional

from .errors import CapacityError
from .graphs import SimpleGraph, cover_ideal, complete_graph
from .resolution import FieldChoice, RATIONALS, is_componentwise_linear

ROW_BUDGET_SECONDS = 30.0


@dataclass(frozen=True)
class SweepConfig:
    n_min: int = 1
    n_max: int = 4
    t_set: tuple[int, ...] = (1,)
    chordal_only: bool = False
    connected_only: bool = False
    complete_only: bool = False
    field: FieldChoice = RATIONALS
    row_budget_s: float = ROW_BUDGET_SECONDS

    def __post_init__(self):
        if not 1 <= self.n_min <= self.n_max <= 6:
            raise ValueError("vertex range must satisfy 1 <= n_min <= n_max <= 6")
        if not self.t_set or any(t < 1 or t > 6 for t in self.t_set):
            raise ValueError("t values must lie in 1..6")


@dataclass
class SweepRecord:
    n: int
    t: int
    edges: tuple[tuple[int, int], ...]
    chordal: bool
    cwl: Optional[bool]
    failing_degree: Optional[int]
    generator_count: Optional[int]
    wall_ms: float
    status: str = "ok"  # "ok" | "skipped: budget" | "skipped: capacity"

    def to_json_dict(self, include_timing: bool = True) -> dict:
        out = {
            "n": self.n,
            "t": self.t,
            "edges": [list(e) for e in self.edges],
            "chordal": self.chordal,
            "cwl": self.cwl,
            "failing_degree": self.failing_degree,
            "gens": self.generator_count,
            "status": self.status,
        }
        if include_timing:
            out["ms"] = round(self.wall_ms, 1)
        return out

    def to_csv_row(self, include_timing: bool = True) -> str:
        edges = ";".join(f"{u}-{v}" for u, v in self.edges)
        cwl = "" if self.cwl is None else str(self.cwl).lower()
        fd = "" if self.failing_degree is None else str(self.failing_degree)
        gens = "" if self.generator_count is None else str(self.generator_count)
        ms = f"{self.wall_ms:.1f}" if include_timing else ""
        return f"{self.n},{self.t},{edges},{str(self.chordal).lower()},{cwl},{fd},{gens},{ms}"


def _edge_slots(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(1, n + 1), 2))


def _graph_from_mask(n: int, mask: int, slots) -> SimpleGraph:
    return SimpleGraph(n, [e for k, e in enumerate(slots) if mask >> k & 1])


def enumerate_graphs(config: SweepConfig) -> Iterator[SimpleGraph]:
    """All labelled graphs in range, filtered per config, in deterministic
    order (vertex count ascending, then edge bitmask ascending)."""
    for n in range(config.n_min, config.n_max + 1):
        if config.complete_only:
            G = complete_graph(n)
            if config.chordal_only and not G.is_chordal()[0]:
                continue
            yield G
            continue
        slots = _edge_slots(n)
        for mask in range(1 << len(slots)):
            G = _graph_from_mask(n, mask, slots)
            if config.connected_only and not G.is_connected():
                continue
            if config.chordal_only and not G.is_chordal()[0]:
                continue
            yield G


def canonical_edge_mask(G: SimpleGraph) -> tuple[int, int]:
    """(n, least edge bitmask over all vertex relabellings); an isomorphism
    invariant for the summary's dedup pass."""
    n = G.nvertices
    slots = _edge_slots(n)
    slot_index = {e: k for k, e in enumerate(slots)}
    best = None
    for perm in permutations(range(1, n + 1)):
        mask = 0
        for u, v in G.edges:
            a, b = perm[u - 1], perm[v - 1]
            mask |= 1 << slot_index[(min(a, b), max(a, b))]
        if best is None or mask < best:
            best = mask
    return n, best or 0


class _RowBudgetExceeded(Exception):
    pass


def _run_with_budget(func, budget_s: float):
    """Run func() under a wall-clock alarm; raises _RowBudgetExceeded.

    Falls back to no budget where setitimer is unavailable (non-main
    thread)."""
    if budget_s is None or budget_s <= 0:
        return func()

    def handler(signum, frame):
        raise _RowBudgetExceeded

    try:
        old = signal.signal(signal.SIGALRM, handler)
    except ValueError:
        return func()
    signal.setitimer(signal.ITIMER_REAL, budget_s)
    try:
        return func()
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0.0)
        signal.signal(signal.SIGALRM, old)


def sweep(config: SweepConfig) -> tuple[list[SweepRecord], dict]:
    """One record per (graph, t); summary with per-t pass/fail counts and
    failing graphs deduplicated up to relabelling."""
    records: list[SweepRecord] = []
    warnings: list[str] = []
    for G in enumerate_graphs(config):
        chordal = G.is_chordal()[0]
        for t in sorted(config.t_set):
            start = time.perf_counter()

            def row():
                ideal = cover_ideal(G, t)
                report = is_componentwise_linear(
                    ideal, config.field, with_certificate=False
                )
                return len(ideal.generators), report

            try:
                gens, report = _run_with_budget(row, config.row_budget_s)
                ms = (time.perf_counter() - start) * 1000
                records.append(
                    SweepRecord(
                        G.nvertices,
                        t,
                        tuple(G.edge_list()),
                        chordal,
                        report.overall,
                        report.failing_degree(),
                        gens,
                        ms,
                    )
                )
                if chordal and t == 1 and not report.overall:
                    warnings.append(
                        f"chordal graph {G.edge_list()} failed at t=1; "
                        "this contradicts the chordal case and indicates a bug"
                    )
            except _RowBudgetExceeded:
                ms = (time.perf_counter() - start) * 1000
                records.append(
                    SweepRecord(
                        G.nvertices, t, tuple(G.edge_list()), chordal,
                        None, None, None, ms, status="skipped: budget",
                    )
                )
            except CapacityError as exc:
                ms = (time.perf_counter() - start) * 1000
                records.append(
                    SweepRecord(
                        G.nvertices, t, tuple(G.edge_list()), chordal,
                        None, None, None, ms, status=f"skipped: capacity ({exc})",
                    )
                )
    summary = _summarize(records, warnings)
    return records, summary


def _summarize(records: list[SweepRecord], warnings: list[str]) -> dict:
    per_t: dict[int, dict] = {}
    fail_classes: dict[int, set] = {}
    for rec in records:
        bucket = per_t.setdefault(
            rec.t, {"rows": 0, "cwl_pass": 0, "cwl_fail": 0, "skipped": 0}
        )
        bucket["rows"] += 1
        if rec.status != "ok":
            bucket["skipped"] += 1
        elif rec.cwl:
            bucket["cwl_pass"] += 1
        else:
            bucket["cwl_fail"] += 1
            G = SimpleGraph(rec.n, rec.edges)
            fail_classes.setdefault(rec.t, set()).add(canonical_edge_mask(G))
    summary = {
        "rows": len(records),
        "per_t": {
            str(t): dict(per_t[t], distinct_failing_classes=len(fail_classes.get(t, ())))
            for t in sorted(per_t)
        },
        "warnings": warnings,
    }
    return summary


def to_jsonl(
    records: list[SweepRecord], summary: dict, include_timing: bool = True
) -> str:
    lines = [
        json.dumps(rec.to_json_dict(include_timing), sort_keys=True)
        for rec in records
    ]
    lines.append(json.dumps({"summary": summary}, sort_keys=True))
    return "\n".join(lines) + "\n"


CSV_HEADER = "n,t,edges,chordal,cwl,failing_degree,gens,ms"


def to_csv(
    records: list[SweepRecord], summary: dict, include_timing: bool = True
) -> str:
    lines = [CSV_HEADER]
    lines.extend(rec.to_csv_row(include_timing) for rec in records)
    lines.append(json.dumps({"summary": summary}, sort_keys=True))
    return "\n".join(lines) + "\n"
