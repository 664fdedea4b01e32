"""Reading and writing the plain-text edge-list format.

::

    # comment lines start with '#', blank lines are ignored
    n m s t
    u v        (m lines, one edge tail -> head per line, in EdgeId order)
"""

import logging
import re
from typing import BinaryIO, Iterable, TextIO

from stcutlib.errors import MissingHeader, ParseError
from stcutlib.graph.digraph import DirectedGraph, build_graph

logger = logging.getLogger(__name__)

_UINT = re.compile(r"[0-9]+")

EdgeListSource = bytes | str | BinaryIO | TextIO


def _read_text(source: EdgeListSource) -> str:
    data = source.read() if hasattr(source, "read") else source
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise ParseError(1, f"input is not valid UTF-8 ({exc.reason})") from exc
    return data


def _lines(text: str) -> list[str]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return [line.rstrip("\r") for line in lines]


def _uints(line: str, lineno: int, count: int, what: str) -> list[int]:
    fields = line.split()
    if len(fields) != count or not all(_UINT.fullmatch(f) for f in fields):
        raise ParseError(lineno, f"expected {what}")
    return [int(f) for f in fields]


def parse_edge_list(source: EdgeListSource) -> tuple[DirectedGraph, int, int]:
    """Parse an edge list into ``(graph, s, t)``.

    Edge order in the input becomes EdgeId order.

    Raises
    ------
    MissingHeader
        If the input holds no header line.
    ParseError
        On a malformed line, an out-of-range ``s``/``t``, or when the number of
        edge lines differs from the declared ``m``.
    EndpointOutOfRange
        If an edge endpoint is not below ``n``.
    """
    lines = _lines(_read_text(source))

    header: list[int] | None = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        if header is None:
            header = _uints(line, lineno, 4, "header 'n m s t' of four non-negative integers")
            n, _, s, t = header
            if s >= n or t >= n:
                raise ParseError(lineno, f"source/sink must lie in [0, {n})")
            continue

        if len(pairs) == header[1]:
            raise ParseError(lineno, "edge count mismatch")
        u, v = _uints(line, lineno, 2, "edge 'u v' of two non-negative integers")
        pairs.append((u, v))

    if header is None:
        raise MissingHeader(1)
    n, m, s, t = header
    if len(pairs) != m:
        raise ParseError(len(lines) + 1, "edge count mismatch")

    g = build_graph(n, pairs)
    logger.debug("parsed edge list: n=%d m=%d s=%d t=%d", n, m, s, t)
    return g, s, t


def serialize_edge_list(
    g: DirectedGraph, s: int, t: int, comments: Iterable[str] = ()
) -> str:
    """Render ``(g, s, t)`` in the edge-list format (single spaces, LF)."""
    out = [f"# {comment}\n" for comment in comments]
    out.append(f"{g.n} {g.m} {s} {t}\n")
    out.extend(f"{u} {v}\n" for u, v in g.edge_pairs())
    return "".join(out)


def read_labels(source: EdgeListSource, n: int) -> list[str]:
    """Read a node label table: line ``i`` holds the label of node ``i``."""
    labels = [line.strip() for line in _lines(_read_text(source))]
    if len(labels) != n:
        raise ParseError(min(len(labels), n) + 1, f"expected {n} labels, got {len(labels)}")
    return labels
