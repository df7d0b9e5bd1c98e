"""graph6, JSON and dot serialization.

graph6 follows the nauty format description: a size header, then the upper
triangle of the adjacency matrix in column order, packed six bits per byte
with offset 63.  Orders up to 258047 (the four-byte header form) are
supported; the eight-byte header form raises :class:`UnsupportedOrder`.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import MalformedEncoding, UnsupportedOrder
from .graph import Graph, build_graph

MAX_GRAPH6_ORDER = 258047
GRAPH6_HEADER = b">>graph6<<"


def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= MAX_GRAPH6_ORDER:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise UnsupportedOrder(f"graph6 encoding supports n <= {MAX_GRAPH6_ORDER}, got {n}")


def to_graph6(g: Graph) -> bytes:
    out = bytearray(_encode_size(g.n))
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def from_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii", errors="strict")
    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise MalformedEncoding("empty graph6 string")
    if any(b < 63 or b > 126 for b in data):
        raise MalformedEncoding("graph6 bytes must lie in 63..126")
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        raise UnsupportedOrder(f"graph6 orders above {MAX_GRAPH6_ORDER} are not supported")
    else:
        if len(data) < 4:
            raise MalformedEncoding("truncated graph6 size header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        if n <= 62:
            raise MalformedEncoding("non-canonical graph6 size header")
        pos = 4
    nbits = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (nbits + 5) // 6:
        raise MalformedEncoding(
            f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}"
        )
    rows = [0] * n
    bit = 0
    i, j = 0, 1
    for byte in body:
        val = byte - 63
        for shift in range(5, -1, -1):
            if bit >= nbits:
                if val >> shift & 1:
                    raise MalformedEncoding("nonzero padding bits")
                continue
            if val >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(rows))


def graph_to_dict(g: Graph) -> dict[str, Any]:
    out: dict[str, Any] = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if g.labels is not None:
        out["labels"] = {str(i): lab for i, lab in enumerate(g.labels) if lab is not None}
    return out


def graph_from_dict(obj: dict[str, Any]) -> Graph:
    try:
        n = int(obj["n"])
        edges = [(int(u), int(v)) for u, v in obj.get("edges", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedEncoding(f"bad JSON graph: {exc}") from None
    labels = None
    if obj.get("labels"):
        labels = [None] * n
        for key, lab in obj["labels"].items():
            idx = int(key)
            if not 0 <= idx < n:
                raise MalformedEncoding(f"label index {idx} out of range")
            labels[idx] = str(lab)
    return build_graph(n, edges, labels)


def to_json(g: Graph) -> str:
    return json.dumps(graph_to_dict(g))


def from_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedEncoding(f"invalid JSON: {exc}") from None
    if "graph" in obj and isinstance(obj["graph"], dict):
        obj = obj["graph"]
    return graph_from_dict(obj)


def to_dot(g: Graph, name: str = "G") -> str:
    """Plain undirected dot with no layout attributes."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if g.labels is not None and g.labels[v] is not None:
            lab = g.labels[v].replace('"', '\\"')
            lines.append(f'  {v} [label="{lab}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str | bytes) -> Graph:
    """Read a graph from JSON (object) or graph6 (first nonblank line)."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    stripped = text.strip()
    if stripped.startswith("{"):
        return from_json(stripped)
    for line in stripped.splitlines():
        if line.strip():
            return from_graph6(line.strip())
    raise MalformedEncoding("no graph found in input")
