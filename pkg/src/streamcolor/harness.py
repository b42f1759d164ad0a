"""Experiment harness: generate, colour under the meter, verify, report.

One CSV row per (spec, seed).  Rows are deterministic except for the wall
time column, which is reported for convenience and excluded from any
reproducibility comparison.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from pathlib import Path

from .bipartite import BipartiteColorer
from .chunked import ChunkColorer, ChunkConfig
from .core import (
    ChunkColour,
    ColourId,
    ContractViolation,
    Edge,
    SpaceMeter,
    Transcript,
    ValidationError,
    canonicalize,
    run_stream,
    validate_endpoints,
    write_transcript,
)
from .generators import (
    ArrivalOrder,
    GraphFamily,
    default_alpha,
    default_signature_bits,
    generate,
)
from .verify import colour_budget, verify

CSV_VERSION = "streamcolor-csv-1"
CSV_COLUMNS = [
    "algo",
    "family",
    "order",
    "seed",
    "n",
    "m",
    "max_degree",
    "param",
    "chunks",
    "colours",
    "overflow",
    "max_palette_degree",
    "peak_words",
    "peak_buffered_edges",
    "proper",
    "error",
    "wall_time_s",
]


class GreedyStreamColorer:
    """Online greedy baseline: smallest colour unused at both endpoints,
    announced immediately.  Uses at most 2*max_degree - 1 colours but stores
    every vertex's colour set, so its live space grows with the edge count;
    the meter makes that cost visible."""

    def __init__(self, n: int):
        if n < 1:
            raise ValidationError(f"vertex count must be >= 1, got {n}")
        self.n = n
        self._used: dict[int, set[int]] = {}
        self.meter = SpaceMeter()
        self.meter.charge(1)
        self.finished = False

    def feed(self, edge: Edge) -> list[tuple[Edge, ColourId]]:
        if self.finished:
            raise ContractViolation("feed after finish")
        validate_endpoints(edge, self.n)
        e = canonicalize(edge)
        au = self._used.setdefault(e.u, set())
        av = self._used.setdefault(e.v, set())
        c = 0
        while c in au or c in av:
            c += 1
        au.add(c)
        av.add(c)
        self.meter.charge(2)  # one colour word per endpoint set
        return [(e, ChunkColour(0, c))]

    def finish(self) -> list[tuple[Edge, ColourId]]:
        if self.finished:
            raise ContractViolation("finish called twice")
        self.finished = True
        return []


@dataclass
class ExperimentSpec:
    family: GraphFamily
    order: ArrivalOrder
    algo: str  # "chunk" | "bipartite" | "greedy-baseline"
    seeds: list[int]
    alpha: int | None = None  # chunk scale; default ceil(log2 n)
    s: int | None = None  # signature width; default ceil(36 ln n)
    strict_meter: bool = True
    out_dir: Path | None = None  # transcripts written here when set

    def __post_init__(self):
        if self.algo not in ("chunk", "bipartite", "greedy-baseline"):
            raise ValidationError(f"unknown algorithm {self.algo!r}")
        if not self.seeds:
            raise ValidationError("at least one seed is required")
        if self.algo == "chunk" and self.s is not None:
            raise ValidationError("s is a bipartite parameter")
        if self.algo == "bipartite" and self.alpha is not None:
            raise ValidationError("alpha is a chunk parameter")


def _make_colorer(spec: ExperimentSpec, n: int, seed: int):
    if spec.algo == "chunk":
        alpha = spec.alpha if spec.alpha is not None else default_alpha(n)
        return ChunkColorer(ChunkConfig(n=n, alpha=alpha)), alpha
    if spec.algo == "bipartite":
        s = spec.s if spec.s is not None else default_signature_bits(n)
        return BipartiteColorer(n, s, seed, strict_meter=spec.strict_meter), s
    return GreedyStreamColorer(n), 0


def run_single(spec: ExperimentSpec, seed: int) -> tuple[dict, Transcript | None]:
    """One seed of the pipeline; returns (row, transcript)."""
    start = time.perf_counter()
    row = {col: "" for col in CSV_COLUMNS}
    row.update(
        algo=spec.algo,
        family=_label(spec.family),
        order=_label(spec.order),
        seed=seed,
    )
    try:
        header, edges = generate(spec.family, spec.order, seed)
        colorer, param = _make_colorer(spec, header.n, seed)
        transcript = run_stream(colorer, edges, header)
        report = verify(transcript)
        budget = None
        if spec.algo == "chunk":
            budget = colour_budget(report, "chunk")
        elif spec.algo == "bipartite":
            budget = colour_budget(report, "bipartite", s=param)
        chunk_keys = [k for k in report.per_palette_stats if k[0] == "chunk"]
        row.update(
            n=header.n,
            m=len(edges),
            max_degree=report.max_degree,
            param=param,
            chunks=len(chunk_keys) if spec.algo == "chunk" else 0,
            colours=report.distinct_colours,
            overflow=report.overflow_colours,
            max_palette_degree=max(
                (st.max_degree for st in report.per_palette_stats.values()), default=0
            ),
            peak_words=colorer.meter.peak_words,
            peak_buffered_edges=getattr(colorer, "peak_buffered_edges", 0),
            proper=int(report.proper and (budget is None or budget.passed)),
        )
        if spec.out_dir is not None:
            spec.out_dir.mkdir(parents=True, exist_ok=True)
            name = f"{spec.algo}_{row['family']}_{row['order']}_{seed}.transcript"
            write_transcript(spec.out_dir / name, transcript)
        row["wall_time_s"] = f"{time.perf_counter() - start:.4f}"
        return row, transcript
    except Exception as exc:  # record, keep the sweep going
        row["error"] = f"{type(exc).__name__}: {exc}"
        row["proper"] = 0
        row["wall_time_s"] = f"{time.perf_counter() - start:.4f}"
        return row, None


def run_experiment(spec: ExperimentSpec) -> list[dict]:
    return [run_single(spec, seed)[0] for seed in spec.seeds]


def _label(x) -> str:
    """Compact deterministic label for family/order values."""
    name = type(x).__name__
    fields = getattr(x, "__dataclass_fields__", {})
    parts = [str(getattr(x, f)) for f in fields if getattr(x, f) is not None]
    return name + ("(" + "-".join(parts) + ")" if parts else "")


def rows_to_csv(rows: list[dict]) -> str:
    lines = [f"# {CSV_VERSION}", ",".join(CSV_COLUMNS)]
    for row in rows:
        lines.append(",".join(str(row.get(col, "")) for col in CSV_COLUMNS))
    return "\n".join(lines) + "\n"
