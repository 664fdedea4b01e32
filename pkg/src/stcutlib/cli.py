"""Command-line interface: ``stcut {bridges,cuts,verify,gen,bench}``.

stdout carries only the document of the command (report, verdict, instance
or bench table); diagnostics go to stderr through `logging`.
"""

import argparse
import json
import logging
import sys
from dataclasses import asdict, replace
from enum import IntEnum
from pathlib import Path
from typing import Iterable, Sequence

from stcutlib.analysis import (
    COLUMNS,
    BenchParams,
    BenchRecorder,
    Verdict,
    VerifyParams,
    run_bench,
    verify_instance,
)
from stcutlib.gen import FAMILY_NAMES, GenSpec, corpus_specs, generate
from stcutlib.graph import parse_edge_list, read_labels, serialize_edge_list
from stcutlib.pathfind import NoPath
from stcutlib.report import SCHEMA_VERSION, ReportBuilder, no_path_document
from stcutlib.stbridge import CutKind, SearchParams, st_bridges
from stcutlib.stcut import st_articulation_points

logger = logging.getLogger(__name__)

DEFAULT_N = 10


class ExitCode(IntEnum):
    OK = 0
    INPUT_ERROR = 1
    NO_PATH = 2
    MISMATCH = 3


def _read_input(path: str | None) -> bytes:
    if path is None or path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _write(text: str, output: str | None = None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8", newline="\n")


def _spec_from_args(args: argparse.Namespace) -> GenSpec:
    return GenSpec(
        args.family,
        n=DEFAULT_N if args.n is None else args.n,
        density=args.density,
        seed=args.seed,
        planted=args.planted,
        unreachable=args.unreachable,
    )


def _search(args: argparse.Namespace, kind: CutKind) -> int:
    g, s, t = parse_edge_list(_read_input(args.input))
    labels = None if args.labels is None else read_labels(Path(args.labels).read_bytes(), g.n)

    run = st_bridges if kind is CutKind.BRIDGE else st_articulation_points
    result = run(g, s, t, SearchParams(queue=args.queue))
    if isinstance(result, NoPath):
        logger.info("sink %d is not reachable from source %d", t, s)
        _write(no_path_document(g, kind, result).render(args.format))
        return ExitCode.NO_PATH

    logger.info("n=%d m=%d: %d %s", g.n, g.m, len(result.sequence), kind.value)
    doc = ReportBuilder(g).report(result).path(args.path).labels(labels).build()
    _write(doc.render(args.format))
    return ExitCode.OK


def cmd_bridges(args: argparse.Namespace) -> int:
    return _search(args, CutKind.BRIDGE)


def cmd_cuts(args: argparse.Namespace) -> int:
    return _search(args, CutKind.ARTICULATION)


def _verify_specs(args: argparse.Namespace) -> Iterable[GenSpec]:
    if args.count is None:
        return [_spec_from_args(args)]
    if args.n is None:
        n_range = (3, 12) if args.family == "planted_chain" else (2, 12)
        specs = corpus_specs(args.count, args.seed, args.family, n_range=n_range)
        return (
            replace(spec, planted=args.planted, unreachable=args.unreachable) for spec in specs
        )
    base = _spec_from_args(args)
    return (replace(base, seed=args.seed + i) for i in range(args.count))


def _verify_document(verdicts: list[Verdict], failures: list[Verdict], fmt: str) -> str:
    verdict = "fail" if failures else "pass"
    if fmt == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "verdict": verdict,
            "instances": len(verdicts),
            "failures": [v.to_dict() for v in failures],
        }
        return json.dumps(doc, indent=2) + "\n"
    lines = [
        f"schema_version\t{SCHEMA_VERSION}",
        f"verdict\t{verdict}",
        f"instances\t{len(verdicts)}",
    ]
    for v in failures:
        lines.extend(f"failure\t{v.label}\t{m.kind}\t{m.aspect}" for m in v.mismatches)
    return "\n".join(lines) + "\n"


def cmd_verify(args: argparse.Namespace) -> int:
    params = VerifyParams(limit_paths=args.limit_paths, queue=args.queue)
    if args.threads is not None:
        params.threads = args.threads

    verdicts: list[Verdict] = []
    if args.input is not None:
        g, s, t = parse_edge_list(_read_input(args.input))
        verdicts.append(verify_instance(g, s, t, params, label=args.input))
    else:
        for spec in _verify_specs(args):
            instance = generate(spec)
            verdicts.append(
                verify_instance(
                    instance.graph,
                    instance.source,
                    instance.sink,
                    params,
                    label=f"{spec.family}:n={spec.n}:seed={spec.seed}",
                    planted_bridges=instance.planted_bridges,
                    planted_articulation=instance.planted_articulation,
                )
            )

    failures = [v for v in verdicts if not v.passed]
    truncated = sum(v.truncated for v in verdicts)
    if truncated:
        logger.warning("%d instances had their path enumeration truncated", truncated)
    logger.info("verified %d instances, %d failed", len(verdicts), len(failures))

    _write(_verify_document(verdicts, failures, args.format))
    return ExitCode.MISMATCH if failures else ExitCode.OK


def cmd_gen(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    instance = generate(spec)
    comments = [f"family {spec.family} n {spec.n} density {spec.density} seed {spec.seed}"]
    if instance.planted_bridges is not None:
        comments.append("planted_bridges " + " ".join(map(str, instance.planted_bridges)))
    if instance.planted_articulation is not None:
        comments.append(
            "planted_articulation " + " ".join(map(str, instance.planted_articulation))
        )
    if args.format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "spec": asdict(spec),
            "n": instance.graph.n,
            "m": instance.graph.m,
            "s": instance.source,
            "t": instance.sink,
            "edges": [list(pair) for pair in instance.graph.edge_pairs()],
            "planted_bridges": instance.planted_bridges,
            "planted_articulation": instance.planted_articulation,
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        text = serialize_edge_list(instance.graph, instance.source, instance.sink, comments)
    _write(text, args.output)
    logger.info("generated %s n=%d m=%d", spec.family, instance.graph.n, instance.graph.m)
    return ExitCode.OK


def _bench_table(rows, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "columns": list(COLUMNS),
            "rows": [list(row.as_tuple()) for row in rows],
        }
        return json.dumps(doc, indent=2) + "\n"
    lines = ["\t".join(COLUMNS)]
    lines.extend("\t".join(str(x) for x in row.as_tuple()) for row in rows)
    return "\n".join(lines) + "\n"


def cmd_bench(args: argparse.Namespace) -> int:
    params = BenchParams(
        family=args.family,
        sizes=tuple(args.sizes),
        repeats=args.repeats,
        density=args.density,
        seed=args.seed,
        kind=args.kind,
        planted=args.planted,
    )
    if args.output is None:
        rows = run_bench(params)
    else:
        attrs = {"family": params.family, "kind": params.kind, "seed": params.seed}
        with BenchRecorder(args.output, attrs=attrs) as recorder:
            rows = run_bench(params, recorder)
    _write(_bench_table(rows, args.format))
    return ExitCode.OK


def _add_input_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", help="edge-list file (default: stdin)")


def _add_genspec_flags(
    parser: argparse.ArgumentParser, family: str, per_instance: bool = True
) -> None:
    parser.add_argument("--family", choices=FAMILY_NAMES, default=family)
    if per_instance:
        parser.add_argument("--n", type=int, help="node count")
    parser.add_argument("--density", type=float, default=1.5)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--planted", type=int, help="planted bridge count (planted_chain)")
    if per_instance:
        parser.add_argument(
            "--unreachable", action="store_true", help="drop every edge into t (random families)"
        )


def _add_queue_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--queue", choices=("fifo", "lifo"), default="fifo")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stcut",
        description="s-t bridges and s-t articulation points of directed graphs.",
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings only")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, help_text in (
        ("bridges", cmd_bridges, "ordered s-t bridges and their components"),
        ("cuts", cmd_cuts, "ordered s-t articulation points and their components"),
    ):
        p = sub.add_parser(name, help=help_text)
        _add_input_flags(p)
        p.add_argument("--format", choices=("json", "tsv"), default="json")
        p.add_argument("--path", action="store_true", help="include the s-t path used")
        p.add_argument("--labels", help="node label file, one label per line")
        _add_queue_flag(p)
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="compare the searches with the brute-force oracle")
    _add_input_flags(p)
    _add_genspec_flags(p, family="random_digraph")
    p.add_argument("--count", type=int, help="verify a corpus of COUNT generated instances")
    p.add_argument("--limit-paths", type=int, default=10_000)
    p.add_argument("--threads", type=int, help="oracle threads (default: $STCUT_THREADS)")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    _add_queue_flag(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="print a generated instance as an edge list")
    _add_genspec_flags(p, family="random_digraph")
    p.add_argument("--format", choices=("edgelist", "json"), default="edgelist")
    p.add_argument("--output", help="write to OUTPUT instead of stdout")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time the searches over a size sweep")
    _add_genspec_flags(p, family="planted_chain", per_instance=False)
    p.set_defaults(density=2.0)
    p.add_argument("--sizes", type=int, nargs="+", default=list(BenchParams().sizes))
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--kind", choices=("bridges", "cuts"), default="bridges")
    p.add_argument("--format", choices=("json", "tsv"), default="tsv")
    p.add_argument("--output", help="also record the rows in an HDF5 file")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as stop:
        # argparse exits with 2 on usage errors, which is NO_PATH here
        return ExitCode.OK if stop.code in (0, None) else ExitCode.INPUT_ERROR
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(
        level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr
    )

    try:
        return int(args.func(args))
    except (ValueError, OSError, OverflowError, MemoryError) as error:
        logger.error("%s", error)
        return ExitCode.INPUT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
