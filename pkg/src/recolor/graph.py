"""Dense bitset graphs and the structural operators used throughout the package.

A :class:`Graph` stores one Python int per vertex; bit ``u`` of ``rows[v]`` is
set iff ``u`` and ``v`` are adjacent.  Graphs are immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import (
    AdjacentPair,
    EmptyPart,
    EmptySet,
    FullSet,
    IndexOutOfRange,
    SelfLoop,
)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on vertices ``0..n-1``.

    ``labels`` and ``origins`` are descriptive only and do not take part in
    equality: two graphs are equal iff they have the same labeled adjacency.
    ``origins[v]`` lists the vertices of the parent graph that ``v`` came from
    (set by :func:`identify`).
    """

    n: int
    rows: tuple[int, ...]
    labels: tuple[str | None, ...] | None = field(default=None, compare=False)
    origins: tuple[tuple[int, ...], ...] | None = field(
        default=None, compare=False, repr=False
    )

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError("row count does not match n")
        if self.labels is not None and len(self.labels) != self.n:
            raise IndexOutOfRange("labels must have one entry per vertex")

    # -- basic queries -------------------------------------------------------

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def adj(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def closed(self, v: int) -> int:
        """Closed neighborhood of ``v`` as a bitmask."""
        return self.rows[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def label(self, v: int) -> str:
        if self.labels is not None and self.labels[v] is not None:
            return self.labels[v]
        return str(v)

    def index_of(self, label: str) -> int:
        """Vertex carrying ``label``; raises KeyError if absent."""
        if self.labels is not None:
            for i, lab in enumerate(self.labels):
                if lab == label:
                    return i
        raise KeyError(label)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.rows[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.full

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on ``vertices``, renumbered in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            r = 0
            for u in iter_bits(self.rows[v]):
                if u in pos:
                    r |= 1 << pos[u]
            rows.append(r)
        labels = None if self.labels is None else tuple(self.labels[v] for v in vertices)
        return Graph(len(vertices), tuple(rows), labels)

    def complement(self) -> "Graph":
        full = self.full
        return Graph(
            self.n,
            tuple(full & ~r & ~(1 << v) for v, r in enumerate(self.rows)),
            self.labels,
        )

    def with_labels(self, labels: Sequence[str | None] | None) -> "Graph":
        return Graph(self.n, self.rows, None if labels is None else tuple(labels))

    def toggle_edge(self, u: int, v: int) -> "Graph":
        """Copy with the adjacency of ``u`` and ``v`` flipped."""
        _check_index(self.n, u)
        _check_index(self.n, v)
        if u == v:
            raise SelfLoop(f"cannot toggle the pair ({u},{u})")
        rows = list(self.rows)
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
        return Graph(self.n, tuple(rows), self.labels)

    def __str__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


def _check_index(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise IndexOutOfRange(f"vertex {v} out of range for n={n}")


def build_graph(
    n: int,
    edges: Iterable[tuple[int, int]],
    labels: Sequence[str | None] | None = None,
) -> Graph:
    """Graph on ``n`` vertices with the given edges; duplicates collapse."""
    if n < 0:
        raise IndexOutOfRange("vertex count must be nonnegative")
    rows = [0] * n
    for u, v in edges:
        _check_index(n, u)
        _check_index(n, v)
        if u == v:
            raise SelfLoop(f"self loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows), None if labels is None else tuple(labels))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(r << offset for r in g.rows)
        offset += g.n
    return Graph(offset, tuple(rows))


def identify(g: Graph, x: int, y: int) -> Graph:
    """Merge nonadjacent ``x`` and ``y`` into one vertex ``z`` with N(z) = N(x) | N(y).

    ``z`` takes the smaller of the two indices; indices above the larger one
    shift down by one.
    """
    _check_index(g.n, x)
    _check_index(g.n, y)
    if x == y:
        raise AdjacentPair("cannot identify a vertex with itself")
    if g.adj(x, y):
        raise AdjacentPair(f"vertices {x} and {y} are adjacent")
    keep, drop = min(x, y), max(x, y)
    low = (1 << drop) - 1

    def squeeze(mask: int) -> int:
        if mask >> drop & 1:
            mask = (mask & ~(1 << drop)) | (1 << keep)
        return (mask & low) | (mask >> (drop + 1) << drop)

    merged = g.rows[x] | g.rows[y]
    rows = []
    origins = []
    for v in range(g.n):
        if v == drop:
            continue
        rows.append(squeeze(merged if v == keep else g.rows[v]))
        origins.append((keep, drop) if v == keep else (v,))
    labels = list(g.labels) if g.labels is not None else [None] * g.n
    labels[keep] = "z"
    del labels[drop]
    return Graph(g.n - 1, tuple(rows), tuple(labels), tuple(origins))


def expand(h: Graph, parts: Sequence[Graph]) -> Graph:
    """Expansion of ``h``: vertex ``v`` becomes the graph ``parts[v]``.

    Parts are laid out consecutively in the vertex order of ``h``; base edges
    become complete joins, base non-edges become empty cuts.
    """
    if len(parts) != h.n:
        raise IndexOutOfRange("need exactly one part per vertex of h")
    offsets = []
    total = 0
    for i, p in enumerate(parts):
        if p.n < 1:
            raise EmptyPart(f"part for vertex {i} is empty")
        offsets.append(total)
        total += p.n
    blocks = [((1 << p.n) - 1) << off for p, off in zip(parts, offsets)]
    rows = []
    labels = []
    for v, (p, off) in enumerate(zip(parts, offsets)):
        cross = 0
        for u in iter_bits(h.rows[v]):
            cross |= blocks[u]
        base = h.label(v) if h.labels is not None else None
        for i in range(p.n):
            rows.append((p.rows[i] << off) | cross)
            if p.n == 1:
                labels.append(base)
            else:
                labels.append(f"{base}.{i + 1}" if base is not None else None)
    has_labels = any(lab is not None for lab in labels)
    return Graph(total, tuple(rows), tuple(labels) if has_labels else None)


def false_twins(g: Graph) -> list[tuple[int, int]]:
    """Ordered pairs (x, y), x != y nonadjacent, with N(x) a subset of N(y)."""
    out = []
    for x in range(g.n):
        nx = g.rows[x]
        for y in range(g.n):
            if x != y and not nx >> y & 1 and nx & ~g.rows[y] == 0:
                out.append((x, y))
    return out


def is_homogeneous(g: Graph, x: int | Iterable[int]) -> bool:
    """True iff every vertex outside ``x`` sees all of ``x`` or none of it.

    ``x`` may be a bitmask or an iterable of vertices.
    """
    mask = x if isinstance(x, int) else mask_of(x)
    if mask & ~g.full:
        raise IndexOutOfRange("vertex set not contained in the graph")
    if mask == 0:
        raise EmptySet("homogeneous-set test needs a nonempty set")
    if mask == g.full:
        raise FullSet("homogeneous-set test needs a proper subset")
    for v in iter_bits(g.full & ~mask):
        seen = g.rows[v] & mask
        if seen and seen != mask:
            return False
    return True


def labeled_graph_from_mask(n: int, mask: int) -> Graph:
    """Graph whose edge set is bit-encoded in ``mask``.

    Pair order is column-major over the upper triangle,
    (0,1), (0,2), (1,2), (0,3), ... (the graph6 order).
    """
    rows = [0] * n
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> bit & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    return Graph(n, tuple(rows))


def edge_mask(g: Graph) -> int:
    """Inverse of :func:`labeled_graph_from_mask`."""
    mask = 0
    bit = 0
    for j in range(1, g.n):
        for i in range(j):
            if g.rows[j] >> i & 1:
                mask |= 1 << bit
            bit += 1
    return mask
