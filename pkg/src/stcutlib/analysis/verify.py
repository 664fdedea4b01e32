"""Cross-check of the linear-time searches against the deletion oracle."""

import logging
import os
from dataclasses import dataclass, field
from typing import Any, Literal, Sequence

from stcutlib.errors import (
    NonInternalBridge,
    OrderViolation,
    PreconditionUnreachable,
    SearchUnreachable,
)
from stcutlib.graph import DirectedGraph
from stcutlib.oracle import DEFAULT_PATH_LIMIT, OracleReport, oracle_report
from stcutlib.pathfind import NoPath
from stcutlib.stbridge import CutKind, CutReport, SearchParams, st_bridges
from stcutlib.stcut import st_articulation_points

logger = logging.getLogger(__name__)

THREADS_ENV = "STCUT_THREADS"


def threads_from_env() -> int:
    """Worker count for oracle deletion tests, from ``STCUT_THREADS``."""
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw == "":
        return 1
    try:
        threads = int(raw)
    except ValueError:
        threads = 0
    if threads < 1:
        logger.warning("ignoring %s=%r, expected a positive integer", THREADS_ENV, raw)
        return 1
    return threads


@dataclass
class VerifyParams:
    """Parameters of a verification run.

    Attributes:
        - limit_paths: cap on the s-t paths enumerated for the order check
        - threads: oracle worker threads
        - queue: queue discipline of the searches under test
    """

    limit_paths: int = field(default=DEFAULT_PATH_LIMIT)
    threads: int = field(default_factory=threads_from_env)
    queue: Literal["fifo", "lifo"] = field(default="fifo")


@dataclass(frozen=True)
class Mismatch:
    kind: str
    aspect: str
    expected: Any
    found: Any

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "aspect": self.aspect,
            "expected": self.expected,
            "found": self.found,
        }


@dataclass(frozen=True)
class Verdict:
    """Outcome of verifying one instance."""

    label: str
    mismatches: tuple[Mismatch, ...] = ()
    truncated: bool = False

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict[str, Any]:
        return {
            "instance": self.label,
            "truncated": self.truncated,
            "mismatches": [m.to_dict() for m in self.mismatches],
        }


def diff_report(report: CutReport, oracle: OracleReport, kind: CutKind) -> list[Mismatch]:
    """Differences in cut set, cut order and component labels."""
    if kind is CutKind.BRIDGE:
        expected_set, expected_order, expected_comp = (
            oracle.bridges, oracle.bridge_order, oracle.comp_bridge
        )
    else:
        expected_set, expected_order, expected_comp = (
            oracle.articulation, oracle.articulation_order, oracle.comp_artic
        )

    found = []
    if set(report.sequence) != expected_set:
        found.append(
            Mismatch(kind.value, "set", sorted(expected_set), sorted(report.sequence))
        )
    elif tuple(report.sequence) != expected_order:
        found.append(
            Mismatch(kind.value, "order", list(expected_order), list(report.sequence))
        )
    if report.comp.tolist() != expected_comp.tolist():
        found.append(
            Mismatch(kind.value, "comp", expected_comp.tolist(), report.comp.tolist())
        )
    return found


def _planted(
    kind: CutKind, planted: Sequence[int] | None, result: CutReport | NoPath
) -> list[Mismatch]:
    if planted is None or isinstance(result, NoPath):
        return []
    if tuple(result.sequence) != tuple(planted):
        return [Mismatch(kind.value, "planted", list(planted), list(result.sequence))]
    return []


def verify_instance(
    g: DirectedGraph,
    s: int,
    t: int,
    params: VerifyParams | None = None,
    label: str = "input",
    planted_bridges: Sequence[int] | None = None,
    planted_articulation: Sequence[int] | None = None,
) -> Verdict:
    """Run both searches and the oracle on one instance and diff them.

    An unreachable sink passes when both searches answer `NoPath`.
    """
    params = params or VerifyParams()
    search = SearchParams(queue=params.queue)

    mismatches: list[Mismatch] = []
    results: dict[CutKind, CutReport | NoPath] = {}
    for kind, run in ((CutKind.BRIDGE, st_bridges), (CutKind.ARTICULATION, st_articulation_points)):
        try:
            results[kind] = run(g, s, t, search)
        except (NonInternalBridge, SearchUnreachable) as error:
            mismatches.append(Mismatch(kind.value, "search", None, str(error)))

    try:
        oracle = oracle_report(g, s, t, params.limit_paths, params.threads)
    except PreconditionUnreachable:
        for kind, result in results.items():
            if not isinstance(result, NoPath):
                mismatches.append(Mismatch(kind.value, "reachability", "no_path", "path"))
        return Verdict(label, tuple(mismatches))
    except OrderViolation as error:
        mismatches.append(
            Mismatch("oracle", "order", list(error.expected), list(error.found))
        )
        return Verdict(label, tuple(mismatches))

    for kind, result in results.items():
        if isinstance(result, NoPath):
            mismatches.append(Mismatch(kind.value, "reachability", "path", "no_path"))
        else:
            mismatches.extend(diff_report(result, oracle, kind))

    if CutKind.BRIDGE in results:
        mismatches.extend(_planted(CutKind.BRIDGE, planted_bridges, results[CutKind.BRIDGE]))
    if CutKind.ARTICULATION in results:
        mismatches.extend(
            _planted(CutKind.ARTICULATION, planted_articulation, results[CutKind.ARTICULATION])
        )

    verdict = Verdict(label, tuple(mismatches), oracle.paths.truncated)
    logger.debug("verified %s: %s", label, "pass" if verdict.passed else "FAIL")
    return verdict
