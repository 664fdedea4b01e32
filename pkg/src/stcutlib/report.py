"""Report documents printed by the command-line interface.

Documents are plain dicts with a fixed key order, rendered as JSON (UTF-8, LF,
two-space indent) or TSV. Bridges are listed with their EdgeId and endpoints,
since endpoints alone are ambiguous in a multigraph.
"""

import json
from dataclasses import dataclass
from typing import Any, Sequence

from stcutlib.graph import DirectedGraph
from stcutlib.pathfind import NoPath
from stcutlib.stbridge import CutKind, CutReport

SCHEMA_VERSION = "1.0"


@dataclass(frozen=True)
class ReportDocument:
    status: str
    kind: CutKind
    sequence: list[Any]
    components: list[list[int]] | None
    comp: list[int] | None
    path_used: list[int] | None
    stats: dict[str, int | None]
    sequence_labels: list[Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "status": self.status,
            "kind": self.kind.value,
            "sequence": self.sequence,
            "components": self.components,
            "comp": self.comp,
            "path_used": self.path_used,
            "stats": self.stats,
        }
        if self.sequence_labels is not None:
            doc["sequence_labels"] = self.sequence_labels
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_tsv(self) -> str:
        """One record per line: ``schema_version``, ``status``, ``kind``, then
        a ``cut`` row per sequence entry, a ``node`` row per node and a
        ``stat`` row per counter."""
        rows = [
            ["schema_version", SCHEMA_VERSION],
            ["status", self.status],
            ["kind", self.kind.value],
        ]
        for i, cut in enumerate(self.sequence, start=1):
            if isinstance(cut, dict):
                rows.append(["cut", i, cut["id"], cut["tail"], cut["head"]])
            else:
                rows.append(["cut", i, cut])
        for v, c in enumerate(self.comp or ()):
            rows.append(["node", v, c])
        if self.path_used is not None:
            rows.append(["path", *self.path_used])
        for name, value in self.stats.items():
            rows.append(["stat", name, "" if value is None else value])
        if self.sequence_labels is not None:
            for i, label in enumerate(self.sequence_labels, start=1):
                rows.append(["label", i, *(label if isinstance(label, list) else [label])])
        return "".join("\t".join(str(x) for x in row) + "\n" for row in rows)

    def render(self, fmt: str) -> str:
        return self.to_tsv() if fmt == "tsv" else self.to_json()


class ReportBuilder:
    """Assemble a `ReportDocument` for a cut report on `graph`.

    Usage::

        doc = ReportBuilder(g).report(report).path(True).labels(names).build()
    """

    def __init__(self, graph: DirectedGraph):
        self.graph = graph
        self._report: CutReport | None = None
        self._with_path = False
        self._labels: Sequence[str] | None = None

    def report(self, report: CutReport) -> "ReportBuilder":
        self._report = report
        return self

    def path(self, enabled: bool = True) -> "ReportBuilder":
        self._with_path = enabled
        return self

    def labels(self, labels: Sequence[str] | None) -> "ReportBuilder":
        self._labels = labels
        return self

    def build(self) -> ReportDocument:
        report = self._report
        if report is None:
            raise ValueError("ReportBuilder.report() must be called before build()")

        g = self.graph
        if report.kind is CutKind.BRIDGE:
            sequence: list[Any] = [
                {"id": e, "tail": int(g.tails[e]), "head": int(g.heads[e])}
                for e in report.sequence
            ]
        else:
            sequence = list(report.sequence)

        sequence_labels = None
        if self._labels is not None:
            names = self._labels
            if report.kind is CutKind.BRIDGE:
                sequence_labels = [[names[b["tail"]], names[b["head"]]] for b in sequence]
            else:
                sequence_labels = [names[a] for a in sequence]

        return ReportDocument(
            status="ok",
            kind=report.kind,
            sequence=sequence,
            components=[list(c) for c in report.components],
            comp=report.comp.tolist(),
            path_used=list(report.path.node_seq) if self._with_path else None,
            stats={
                "n": g.n,
                "m": g.m,
                "path_len": len(report.path),
                "phases": report.stats.phases,
                "visited": report.stats.visited,
                "edge_scans": report.stats.edge_scans,
            },
            sequence_labels=sequence_labels,
        )


def no_path_document(graph: DirectedGraph, kind: CutKind, no_path: NoPath) -> ReportDocument:
    """Document for an unreachable sink: empty sequence and no components."""
    return ReportDocument(
        status="no_path",
        kind=kind,
        sequence=[],
        components=None,
        comp=None,
        path_used=None,
        stats={
            "n": graph.n,
            "m": graph.m,
            "source": no_path.source,
            "sink": no_path.sink,
        },
    )
