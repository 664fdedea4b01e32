"""Size sweep timing the cut searches on generated instances."""

import logging
import time
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from stcutlib.gen import GenSpec, generate
from stcutlib.pathfind import NoPath
from stcutlib.stbridge import CutReport, st_bridges
from stcutlib.stcut import st_articulation_points

from .bench_recorder import BenchRecorder

logger = logging.getLogger(__name__)


@dataclass
class BenchParams:
    """Parameters of a bench sweep.

    Attributes:
        - family: generator family of every instance
        - sizes: target edge counts, one row each
        - repeats: timed runs per size; the row carries the median
        - density: random edges per node passed to the generator
        - seed: generator seed shared by all sizes
        - kind: "bridges" or "cuts" (articulation points)
        - planted: planted bridge count; planted_chain defaults to n // 100
    """

    family: str = field(default="planted_chain")
    sizes: tuple[int, ...] = field(default=(100_000, 200_000, 400_000, 800_000))
    repeats: int = field(default=5)
    density: float = field(default=2.0)
    seed: int = field(default=0)
    kind: Literal["bridges", "cuts"] = field(default="bridges")
    planted: int | None = field(default=None)

    def __post_init__(self):
        if self.kind not in ("bridges", "cuts"):
            raise ValueError(f"kind must be 'bridges' or 'cuts', got {self.kind!r}")
        if self.repeats < 1:
            raise ValueError(f"repeats must be positive, got {self.repeats}")


@dataclass(frozen=True)
class BenchRow:
    n: int
    m: int
    wall_time: float
    visited: int
    phases: int
    edge_scans: int

    def as_tuple(self) -> tuple[float, ...]:
        return (self.n, self.m, self.wall_time, self.visited, self.phases, self.edge_scans)


def spec_for_edges(params: BenchParams, edges: int) -> GenSpec:
    """Spec whose instance has roughly `edges` edges.

    Every family lays roughly one skeleton edge per node on top of its
    ``density * n`` random edges.
    """
    n = max(2, int(round(edges / (1.0 + params.density))))
    planted = params.planted
    if params.family == "planted_chain" and planted is None:
        planted = max(1, n // 100)
    return GenSpec(
        params.family,
        n=n,
        density=params.density,
        seed=params.seed,
        planted=planted if params.family == "planted_chain" else None,
    )


def run_bench(params: BenchParams, recorder: BenchRecorder | None = None) -> list[BenchRow]:
    search = st_bridges if params.kind == "bridges" else st_articulation_points

    rows = []
    for size in params.sizes:
        instance = generate(spec_for_edges(params, size))
        g, s, t = instance.graph, instance.source, instance.sink

        times = []
        report: CutReport | NoPath | None = None
        for _ in range(params.repeats):
            start = time.perf_counter()
            report = search(g, s, t)
            times.append(time.perf_counter() - start)

        if isinstance(report, NoPath):
            visited, phases, scans = 0, 0, 0
        else:
            visited, phases, scans = (
                report.stats.visited,
                report.stats.phases,
                report.stats.edge_scans,
            )

        row = BenchRow(g.n, g.m, float(np.median(times)), visited, phases, scans)
        logger.info(
            "bench %s n=%d m=%d: %.4fs (median of %d)",
            params.kind, row.n, row.m, row.wall_time, params.repeats,
        )
        if recorder is not None:
            recorder.append(row.as_tuple())
        rows.append(row)
    return rows
