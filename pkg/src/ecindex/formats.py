"""graph6 and edge-list readers/writers.

Only the short graph6 form (n <= 62, one size byte) is handled. Edge-list
text is a header line ``n m`` followed by ``m`` lines ``u v``; several such
blocks may follow each other in one file.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from pathlib import Path

from .errors import EcIndexError, ParseError, SizeError
from .graph import Graph, from_edge_list

MAX_GRAPH6_VERTICES = 62


def read_graph6(line: str) -> Graph:
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise ParseError("empty graph6 string", "byte 0")
    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"character {ch!r} outside the graph6 range 63..126", f"byte {i}")
    n = ord(text[0]) - 63
    if n > MAX_GRAPH6_VERTICES:
        raise ParseError("multi-byte size field is not supported (n > 62)", "byte 0")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(text) != 1 + nbytes:
        raise ParseError(f"expected {1 + nbytes} bytes for n={n}, got {len(text)}", f"byte {min(len(text), 1 + nbytes)}")
    bits = []
    for ch in text[1:]:
        value = ord(ch) - 63
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits", f"byte {len(text) - 1}")
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    return from_edge_list(n, edges)


def write_graph6(g: Graph) -> str:
    n = g.n
    if n > MAX_GRAPH6_VERTICES:
        raise SizeError(f"graph6 short form holds n <= {MAX_GRAPH6_VERTICES}, got n={n}; use the edge-list format")
    bits = [1 if g.has_edge(u, v) else 0 for v in range(1, n) for u in range(v)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _ints(text: str, lineno: int, count: int) -> list[int]:
    parts = text.split()
    if len(parts) != count:
        raise ParseError(f"expected {count} integers, got {text!r}", f"line {lineno}")
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise ParseError(f"non-integer token in {text!r}", f"line {lineno}") from None


def read_edgelists(text: str) -> list[Graph]:
    """Every ``n m`` block in ``text``, in order."""
    lines = [(i, _strip_comment(raw)) for i, raw in enumerate(text.splitlines(), start=1)]
    lines = [(i, s) for i, s in lines if s]
    graphs = []
    pos = 0
    while pos < len(lines):
        lineno, header = lines[pos]
        n, m = _ints(header, lineno, 2)
        if n < 0 or m < 0:
            raise ParseError("vertex and edge counts must be nonnegative", f"line {lineno}")
        body = lines[pos + 1:pos + 1 + m]
        if len(body) < m:
            raise ParseError(f"header declares {m} edges but only {len(body)} follow", f"line {lineno}")
        pairs = [_ints(s, i, 2) for i, s in body]
        try:
            g = from_edge_list(n, pairs)
        except EcIndexError as exc:
            raise ParseError(str(exc), f"line {lineno}") from None
        if g.m != m:
            raise ParseError(f"header declares {m} edges but {g.m} distinct edges were given", f"line {lineno}")
        graphs.append(g)
        pos += 1 + m
    return graphs


def read_edgelist(text: str) -> Graph:
    graphs = read_edgelists(text)
    if len(graphs) != 1:
        raise ParseError(f"expected one graph, found {len(graphs)}", "line 1")
    return graphs[0]


def write_edgelist(g: Graph) -> str:
    return "\n".join([f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]) + "\n"


@dataclass
class GraphDocument:
    source: str
    format: str
    graphs: list[Graph] = field(default_factory=list)

    def write(self) -> str:
        if self.format == "graph6":
            return "".join(write_graph6(g) + "\n" for g in self.graphs)
        return "".join(write_edgelist(g) for g in self.graphs)


def sniff_format(text: str) -> str:
    for raw in text.splitlines():
        line = _strip_comment(raw)
        if line:
            return "edgelist" if all(tok.lstrip("-").isdigit() for tok in line.split()) else "graph6"
    return "graph6"


def parse_document(text: str, source: str = "<string>", fmt: str = "auto") -> GraphDocument:
    if fmt == "auto":
        fmt = sniff_format(text)
    if fmt == "edgelist":
        graphs = read_edgelists(text)
    elif fmt == "graph6":
        graphs = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                graphs.append(read_graph6(line))
            except ParseError as exc:
                raise ParseError(str(exc), f"line {lineno}") from None
    else:
        raise ParseError(f"unknown format {fmt!r}")
    return GraphDocument(source, fmt, graphs)


def read_document(source: str, fmt: str = "auto") -> GraphDocument:
    """Load graphs from a path, ``-`` for stdin, or an inline ``g6:<string>``."""
    if source.startswith("g6:"):
        return _parse_named(source[3:], source, "graph6")
    if source == "-":
        return _parse_named(sys.stdin.read(), "<stdin>", fmt)
    path = Path(source)
    try:
        text = path.read_text(encoding="ascii")
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc.strerror}") from None
    except UnicodeDecodeError as exc:
        raise ParseError(f"{source}: non-ASCII content", f"byte {exc.start}") from None
    if fmt == "auto" and path.suffix in (".g6", ".graph6"):
        fmt = "graph6"
    elif fmt == "auto" and path.suffix in (".el", ".edges", ".edgelist"):
        fmt = "edgelist"
    return _parse_named(text, source, fmt)


def _parse_named(text: str, source: str, fmt: str) -> GraphDocument:
    try:
        return parse_document(text, source, fmt)
    except ParseError as exc:
        raise ParseError(f"{source}: {exc}") from None
