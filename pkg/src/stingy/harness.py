"""Batch sweeps: read graphs, compute invariant records, evaluate bounds, report."""

from __future__ import annotations

import json
import multiprocessing
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from pathlib import Path
from typing import Iterable, Iterator, TextIO

from .bounds import BOUNDS, CATALOG, BoundVerdict, evaluate_bound, get_bound, slack_statistics
from .catalog import CATALOG_MAX_N, catalog_lines, random_lines
from .coloring import ENUM_MAX_N, all_optimal_classes_at_most, stingy_coloring
from .graph import Graph, GraphFormatError, complement, decode_graph6, encode_graph6
from .invariants import (
    InvariantRecord,
    SubgraphChi,
    basic_record,
    doubly_critical_edges,
)
from .respectful import RemainderReport, minimal_remainder_respectful

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    input: str | None = None
    exhaustive: int | None = None
    random: tuple[int, float, int, int] | None = None
    bounds: tuple[str, ...] = tuple(BOUNDS)
    r: int = 3
    jobs: int = 1
    max_enum_n: int = ENUM_MAX_N
    out: str | None = None
    tight_cap: int | None = 20
    timing: bool = False

    def validate(self) -> None:
        sources = [self.input is not None, self.exhaustive is not None, self.random is not None]
        if sum(sources) != 1:
            raise ConfigError("exactly one of --input, --exhaustive, --random is required")
        for b in self.bounds:
            if b not in BOUNDS:
                raise ConfigError(f"unknown bound id {b!r}")
        if self.r < 1:
            raise ConfigError("--r must be >= 1")
        if self.jobs < 1:
            raise ConfigError("--jobs must be >= 1")
        if not 0 <= self.max_enum_n <= ENUM_MAX_N:
            raise ConfigError(f"--max-enum-n must lie in 0..{ENUM_MAX_N}")
        if self.tight_cap is not None and self.tight_cap < 0:
            raise ConfigError("--tight-cap must be >= 0")
        if self.exhaustive is not None:
            if not 0 <= self.exhaustive <= CATALOG_MAX_N:
                raise ConfigError(f"--exhaustive supports 0..{CATALOG_MAX_N}")
            if self.exhaustive > self.max_enum_n:
                raise ConfigError("--exhaustive exceeds --max-enum-n")
        if self.random is not None:
            n, p, seed, count = self.random
            if n < 0 or count < 0 or not 0 <= p <= 1 or not 0 <= seed < 2**64:
                raise ConfigError("--random needs N>=0, 0<=P<=1, 0<=SEED<2^64, COUNT>=0")
            if n > self.max_enum_n:
                raise ConfigError("--random N exceeds --max-enum-n")

    def echo(self) -> dict:
        """Config as recorded in reports; jobs and output paths are omitted."""
        return {
            "input": self.input,
            "exhaustive": self.exhaustive,
            "random": None if self.random is None else dict(zip(("n", "p", "seed", "count"), self.random)),
            "bounds": list(self.bounds),
            "r": self.r,
            "max_enum_n": self.max_enum_n,
            "tight_cap": self.tight_cap,
        }


# --- per-graph pipeline ------------------------------------------------------------


@dataclass(frozen=True)
class GraphAnalysis:
    record: InvariantRecord
    stingy: tuple[tuple[int, ...], ...] | None
    remainder: RemainderReport | None


def analyse(g: Graph, r: int = 3, needs: Iterable[str] | None = None) -> GraphAnalysis:
    """Compute every invariant in ``needs`` (default: all) for ``g``."""
    needs = set(needs) if needs is not None else {
        "iota", "has_doubly_critical_edge", "small_classes", "respectful_classes", "complement"
    }
    chi = SubgraphChi(g)
    base = basic_record(g, chi)
    extra: dict = {}
    stingy = remainder = None
    if "iota" in needs:
        c = stingy_coloring(g, chi)
        stingy = c.classes
        extra["iota"] = c.singletons
    if "has_doubly_critical_edge" in needs:
        dce = doubly_critical_edges(g, chi)
        extra["has_doubly_critical_edge"] = bool(dce)
        extra["doubly_critical_witness"] = dce[0] if dce else None
    if "small_classes" in needs:
        extra["small_classes"] = all_optimal_classes_at_most(g, 2, chi)
    if "respectful_classes" in needs:
        remainder = minimal_remainder_respectful(g, r, chi)
        extra.update(r=r, respectful_classes=remainder.partial.classes,
                     remainder_order=remainder.remainder_order)
    if "complement" in needs:
        extra["complement"] = basic_record(complement(g))
    record = InvariantRecord(**{**base.__dict__, **extra})
    return GraphAnalysis(record, stingy, remainder)


def compute_record(g: Graph, r: int = 3) -> InvariantRecord:
    return analyse(g, r).record


def _needs_of(bound_ids: Iterable[str]) -> set[str]:
    return {name for b in bound_ids for name in get_bound(b).needs}


@dataclass(frozen=True)
class GraphResult:
    line_no: int
    graph6: str | None
    record: InvariantRecord | None = None
    verdicts: tuple[BoundVerdict, ...] = ()
    error: str | None = None
    skipped: bool = False


def _process(item: tuple[int, str], bounds: tuple[str, ...], r: int, max_n: int) -> GraphResult:
    line_no, text = item
    try:
        g = decode_graph6(text)
    except GraphFormatError as exc:
        return GraphResult(line_no, None, error=str(exc))
    g6 = encode_graph6(g)
    if g.n > max_n:
        return GraphResult(line_no, g6, error=f"n={g.n} above --max-enum-n {max_n}", skipped=True)
    rec = analyse(g, r, _needs_of(bounds)).record
    return GraphResult(line_no, g6, rec, tuple(evaluate_bound(g6, rec, b) for b in bounds))


def _source(config: SweepConfig) -> Iterator[tuple[int, str]]:
    """Numbered non-blank input lines. Unreadable files fail here, not mid-sweep."""
    if config.exhaustive is not None:
        lines: Iterable[str] = catalog_lines(config.exhaustive)
    elif config.random is not None:
        lines = random_lines(*config.random)
    elif config.input == "-":
        lines = sys.stdin
    else:
        try:
            lines = Path(config.input).read_text(encoding="ascii", errors="replace").splitlines()
        except OSError as exc:
            raise InputError(f"cannot read {config.input}: {exc}") from exc
    return ((i, line.strip()) for i, line in enumerate(lines, 1) if line.strip())


class InputError(OSError):
    pass


def iter_results(config: SweepConfig) -> Iterator[GraphResult]:
    """Per-graph results in input order, whatever the worker count."""
    config.validate()
    work = partial(_process, bounds=config.bounds, r=config.r, max_n=config.max_enum_n)
    items = _source(config)
    return _drive(work, items, config.jobs)


def _drive(work, items, jobs: int) -> Iterator[GraphResult]:
    if jobs == 1:
        yield from map(work, items)
        return
    with multiprocessing.get_context("spawn").Pool(jobs) as pool:
        yield from pool.imap(work, items, chunksize=8)


# --- reports ------------------------------------------------------------------------


def frac(x: Fraction | None) -> str | None:
    return None if x is None else f"{x.numerator}/{x.denominator}"


@dataclass
class SweepReport:
    config: SweepConfig
    results_count: int = 0
    input_lines: int = 0
    malformed: list[tuple[int, str]] = field(default_factory=list)
    skipped: list[tuple[int, str]] = field(default_factory=list)
    verdicts: list[BoundVerdict] = field(default_factory=list)
    wall_time_ms: int | None = None

    @property
    def proven_violations(self) -> list[BoundVerdict]:
        return [v for v in self.verdicts if not v.satisfied and not BOUNDS[v.bound_id].conjecture]

    @property
    def exit_code(self) -> int:
        return EXIT_VIOLATION if self.proven_violations else EXIT_OK

    def to_dict(self) -> dict:
        stats = slack_statistics(sorted(self.verdicts, key=lambda v: (v.graph6, v.bound_id)))
        per_bound = []
        for b in self.config.bounds:
            s = stats.get(b)
            tight = sorted(s.tight) if s else []
            if self.config.tight_cap is not None:
                tight = tight[: self.config.tight_cap]
            per_bound.append({
                "id": b,
                "conjecture": BOUNDS[b].conjecture,
                "evaluated": s.evaluated if s else 0,
                "hypothesis_hits": s.hypothesis_hits if s else 0,
                "satisfied": s.satisfied if s else 0,
                "violations": [
                    {"graph6": v.graph6, "lhs": v.lhs, "rhs": frac(v.rhs_value), "slack": frac(v.slack)}
                    for v in (s.violations if s else [])
                ],
                "min_slack": frac(s.min_slack) if s else None,
                "tight_count": s.tight_count if s else 0,
                "tight": tight,
                "detail_counts": dict(sorted(s.details.items())) if s else {},
            })
        return {
            "config": self.config.echo(),
            "catalog": [BOUNDS[b].describe() for b in self.config.bounds],
            "per_bound": per_bound,
            "totals": {
                "input_lines": self.input_lines,
                "processed": self.results_count,
                "malformed": len(self.malformed),
                "skipped_guard": len(self.skipped),
                "proven_violations": len(self.proven_violations),
                "conjecture_violations": sum(
                    1 for v in self.verdicts if not v.satisfied and BOUNDS[v.bound_id].conjecture
                ),
            },
            "malformed": [{"line": i, "error": e} for i, e in self.malformed],
            "skipped_guard": [{"line": i, "reason": e} for i, e in self.skipped],
            "wall_time_ms": self.wall_time_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def table(self) -> str:
        rows = [("bound", "hits", "satisfied", "violations", "min_slack", "tight")]
        for pb in self.to_dict()["per_bound"]:
            rows.append((
                pb["id"] + (" (conj.)" if pb["conjecture"] else ""),
                str(pb["hypothesis_hits"]), f"{pb['satisfied']}/{pb['evaluated']}",
                str(len(pb["violations"])), str(pb["min_slack"]), str(pb["tight_count"]),
            ))
        widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
        lines.append(
            f"graphs: {self.results_count} processed, {len(self.malformed)} malformed, "
            f"{len(self.skipped)} skipped"
        )
        if self.wall_time_ms is not None:
            lines.append(f"wall time: {self.wall_time_ms} ms")
        return "\n".join(lines) + "\n"


def run_sweep(config: SweepConfig, stderr: TextIO | None = None, keep: list | None = None) -> SweepReport:
    """Run a sweep. Violations are echoed to ``stderr`` as they are found.

    If ``keep`` is a list, every :class:`GraphResult` is appended to it.
    """
    start = time.perf_counter()
    report = SweepReport(config)
    for res in iter_results(config):
        report.input_lines += 1
        if keep is not None:
            keep.append(res)
        if res.error is not None:
            (report.skipped if res.skipped else report.malformed).append((res.line_no, res.error))
            if stderr is not None:
                print(f"line {res.line_no}: {res.error}", file=stderr)
            continue
        report.results_count += 1
        report.verdicts.extend(res.verdicts)
        if stderr is not None:
            for v in res.verdicts:
                if not v.satisfied:
                    tag = "CRITICAL conjecture violation" if BOUNDS[v.bound_id].conjecture else "VIOLATION"
                    print(f"{tag}: {v.bound_id} {v.graph6} chi={v.lhs} rhs={frac(v.rhs_value)}",
                          file=stderr, flush=True)
    report.verdicts.sort(key=lambda v: (v.graph6, v.bound_id))
    if config.timing:
        report.wall_time_ms = round((time.perf_counter() - start) * 1000)
    return report


def find_witnesses(config: SweepConfig, bound_id: str, mode: str) -> list[str]:
    """graph6 of every input graph that is tight for (or violates) ``bound_id``."""
    get_bound(bound_id)
    if mode not in ("tight", "violation"):
        raise ConfigError(f"mode must be 'tight' or 'violation', not {mode!r}")
    found = set()
    for res in iter_results(SweepConfig(**{**config.__dict__, "bounds": (bound_id,)})):
        for v in res.verdicts:
            if (v.tight if mode == "tight" else not v.satisfied):
                found.add(v.graph6)
    return sorted(found)


def analysis_dict(g: Graph, r: int = 3) -> dict:
    """Structured rendering of a single graph's invariants."""
    a = analyse(g, r)
    rec, rem = a.record, a.remainder
    comp = rec.complement
    return {
        "graph6": encode_graph6(g),
        "n": rec.n,
        "edges": g.edge_count,
        "chi": rec.chi,
        "omega": rec.omega,
        "alpha": rec.alpha,
        "delta": rec.delta,
        "iota": rec.iota,
        "stingy_coloring": [list(c) for c in a.stingy],
        "has_doubly_critical_edge": rec.has_doubly_critical_edge,
        "doubly_critical_witness": list(rec.doubly_critical_witness) if rec.doubly_critical_witness else None,
        "small_classes": rec.small_classes,
        "minimal_remainder": {
            "r": rem.r,
            "classes": [list(c) for c in rem.partial.classes],
            "class_count": rem.class_count,
            "remainder_order": rem.remainder_order,
            "remainder_chi": rem.remainder_chi,
        },
        "complement": {"chi": comp.chi, "omega": comp.omega, "alpha": comp.alpha, "delta": comp.delta},
    }


__all__ = [
    "CATALOG",
    "ConfigError",
    "GraphResult",
    "InputError",
    "SweepConfig",
    "SweepReport",
    "analyse",
    "analysis_dict",
    "compute_record",
    "find_witnesses",
    "iter_results",
    "run_sweep",
]
