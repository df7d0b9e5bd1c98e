"""Reconfiguration graph R_k(G) of proper k-colorings under single-vertex recoloring.

Nodes of R_k(G) are never materialized as a graph.  A coloring is identified
by its canonical code (base k, vertex 0 least significant, 0-based digits);
proper colorings are enumerated in ascending code order and merged with a
union-find keyed on an index of visited codes.
"""

from __future__ import annotations

import os
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Any, Iterator, Optional

from .coloring import ProperColoring, RecoloringStep, missing_colors
from .errors import InvalidK, PaletteMismatch, StateSpaceTooLarge
from .formats import to_graph6
from .graph import Graph, iter_bits

DEFAULT_LIMIT = 10**8


def default_limit() -> int:
    """State-space guard: ``RECOLOR_LIMIT`` from the environment, else 10^8."""
    raw = os.environ.get("RECOLOR_LIMIT")
    if raw:
        return int(float(raw))
    return DEFAULT_LIMIT


def _guard(g: Graph, k: int, limit: Optional[int]) -> None:
    limit = default_limit() if limit is None else limit
    estimate = k**g.n
    if estimate > limit:
        raise StateSpaceTooLarge(estimate, limit, to_graph6(g).decode())


@dataclass
class ReconfigReport:
    k: int
    total: int
    components: int
    sizes: list[int]
    frozen: list[ProperColoring] = field(default_factory=list)
    mixing: bool = True

    def to_dict(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "total": self.total,
            "components": self.components,
            "sizes": self.sizes,
            "frozen": [c.to_dict() for c in self.frozen],
            "mixing": self.mixing,
        }


def enumerate_colorings(g: Graph, k: int) -> Iterator[ProperColoring]:
    """Every proper k-coloring of ``g`` exactly once, in ascending code order."""
    if k < 0:
        raise InvalidK(f"k must be nonnegative, got {k}")
    for col in _assignments(g, k):
        yield ProperColoring(k, tuple(c + 1 for c in col))


def _assignments(g: Graph, k: int) -> Iterator[list[int]]:
    """0-based proper assignments in ascending code order.

    Vertex n-1 is the most significant digit, so it is fixed first.  The
    yielded list is reused between iterations.
    """
    n = g.n
    if n == 0:
        yield []
        return
    if k == 0:
        return
    higher = [[u for u in iter_bits(g.rows[v]) if u > v] for v in range(n)]
    col = [-1] * n
    v = n - 1
    while True:
        c = col[v] + 1
        hv = higher[v]
        while c < k and any(col[u] == c for u in hv):
            c += 1
        if c < k:
            col[v] = c
            if v == 0:
                yield col
            else:
                v -= 1
                col[v] = -1
        else:
            col[v] = -1
            v += 1
            if v == n:
                return


def is_frozen(g: Graph, c: ProperColoring) -> bool:
    """True iff every closed neighborhood carries all k colors."""
    c.check(g)
    return all(missing_colors(g, c, v) == 0 for v in range(g.n))


def recoloring_neighbors(g: Graph, c: ProperColoring) -> Iterator[ProperColoring]:
    """Colorings adjacent to ``c`` in R_k(G), by vertex then color."""
    c.check(g)
    full = (1 << c.k) - 1
    for v in range(g.n):
        used = 1 << (c.assign[v] - 1)
        for u in iter_bits(g.rows[v]):
            used |= 1 << (c.assign[u] - 1)
        for b in iter_bits(full & ~used):
            assign = list(c.assign)
            assign[v] = b + 1
            yield ProperColoring(c.k, tuple(assign))


def _census(g: Graph, k: int, keep: bool):
    """One pass over proper colorings in code order.

    Each coloring is unioned with its neighbors of smaller code (already
    indexed), which covers every edge of R_k(G) exactly once.  Returns the
    parent array (already flattened), the sorted codes, and the codes of
    isolated colorings.
    """
    n = g.n
    nbrs = [list(iter_bits(r)) for r in g.rows]
    pw = [k**v for v in range(n)]
    fullk = (1 << k) - 1
    index: dict[int, int] = {}
    parent: list[int] = []
    codes: list[int] = []
    isolated: list[int] = []

    for col in _assignments(g, k):
        code = 0
        for v in range(n - 1, -1, -1):
            code = code * k + col[v]
        me = len(parent)
        index[code] = me
        parent.append(me)
        if keep:
            codes.append(code)
        lonely = True
        for v in range(n):
            cv = col[v]
            used = 1 << cv
            for u in nbrs[v]:
                used |= 1 << col[u]
            free = fullk & ~used
            if not free:
                continue
            lonely = False
            low = free & ((1 << cv) - 1)
            while low:
                b = low & -low
                low ^= b
                j = index[code - (cv - (b.bit_length() - 1)) * pw[v]]
                # union, smaller index wins
                a = me
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                while parent[j] != j:
                    parent[j] = parent[parent[j]]
                    j = parent[j]
                if a != j:
                    if a < j:
                        parent[j] = a
                    else:
                        parent[a] = j
        if lonely:
            isolated.append(code)

    for i in range(len(parent)):
        r = parent[i]
        while parent[r] != r:
            r = parent[r]
        parent[i] = r
    return parent, codes, isolated


def reconfig_analysis(g: Graph, k: int, limit: Optional[int] = None) -> ReconfigReport:
    """Exact component census of R_k(g)."""
    if k < 1:
        raise InvalidK(f"k must be >= 1, got {k}")
    _guard(g, k, limit)
    parent, _, isolated = _census(g, k, keep=False)
    sizes = Counter(parent)
    singletons = {r for r, s in sizes.items() if s == 1}
    frozen = [ProperColoring.from_code(code, g.n, k) for code in isolated]
    # isolated nodes and singleton components must coincide
    if len(frozen) != len(singletons):
        raise AssertionError("frozen colorings disagree with singleton components")
    return ReconfigReport(
        k=k,
        total=len(parent),
        components=len(sizes),
        sizes=sorted(sizes.values(), reverse=True),
        frozen=frozen,
        mixing=len(sizes) <= 1,
    )


def coloring_components(g: Graph, k: int, limit: Optional[int] = None) -> list[list[int]]:
    """Components of R_k(g) as lists of canonical codes, ordered by smallest code."""
    if k < 1:
        raise InvalidK(f"k must be >= 1, got {k}")
    _guard(g, k, limit)
    parent, codes, _ = _census(g, k, keep=True)
    groups: dict[int, list[int]] = {}
    for i, r in enumerate(parent):
        groups.setdefault(r, []).append(codes[i])
    return list(groups.values())


def is_k_mixing(g: Graph, k: int, limit: Optional[int] = None) -> bool:
    return reconfig_analysis(g, k, limit).mixing


def recoloring_path(
    g: Graph, a: ProperColoring, b: ProperColoring, limit: Optional[int] = None
) -> Optional[list[RecoloringStep]]:
    """Shortest recoloring sequence from ``a`` to ``b``, or None if they lie in
    different components of R_k(g).  Breadth-first from ``a``."""
    if a.k != b.k:
        raise PaletteMismatch(f"palettes differ: {a.k} vs {b.k}")
    a.check(g)
    b.check(g)
    k = a.k
    _guard(g, k, limit)
    if a.assign == b.assign:
        return []
    n = g.n
    nbrs = [list(iter_bits(r)) for r in g.rows]
    pw = [k**v for v in range(n)]
    fullk = (1 << k) - 1
    start, goal = a.code(), b.code()
    prev: dict[int, tuple[int, int, int, int]] = {start: (-1, -1, -1, -1)}
    queue = deque([start])
    while queue:
        code = queue.popleft()
        col = [(code // pw[v]) % k for v in range(n)]
        for v in range(n):
            cv = col[v]
            used = 1 << cv
            for u in nbrs[v]:
                used |= 1 << col[u]
            for c in iter_bits(fullk & ~used):
                nxt = code + (c - cv) * pw[v]
                if nxt in prev:
                    continue
                prev[nxt] = (code, v, cv, c)
                if nxt == goal:
                    steps = []
                    cur = nxt
                    while cur != start:
                        before, vv, old, new = prev[cur]
                        steps.append(RecoloringStep(vv, old + 1, new + 1))
                        cur = before
                    steps.reverse()
                    return steps
                queue.append(nxt)
    return None


def apply_steps(c: ProperColoring, steps: list[RecoloringStep]) -> list[ProperColoring]:
    """Replay ``steps`` from ``c``; returns every intermediate coloring (including c)."""
    out = [c]
    assign = list(c.assign)
    for s in steps:
        if assign[s.vertex] != s.old:
            raise ValueError(f"step {s} does not match current color {assign[s.vertex]}")
        assign[s.vertex] = s.new
        out.append(ProperColoring(c.k, tuple(assign)))
    return out


# -- frozen-coloring search ---------------------------------------------------

def _frozen_search(g: Graph, k: int, break_symmetry: bool) -> Iterator[list[int]]:
    n = g.n
    rows = g.rows
    fullk = (1 << k) - 1
    closed = [list(iter_bits(rows[v] | (1 << v))) for v in range(n)]
    nbrs = [list(iter_bits(rows[v])) for v in range(n)]
    colors = [0] * n  # 1-based, 0 = unassigned
    avail = [fullk] * n
    covered = [0] * n  # colors present on assigned vertices of N[v]
    open_cnt = [len(closed[v]) for v in range(n)]  # unassigned vertices in N[v]
    # vertices whose coverage could change when w is assigned: N[N[w]]
    reach = []
    for w in range(n):
        m = 0
        for u in closed[w]:
            m |= rows[u] | (1 << u)
        reach.append(list(iter_bits(m)))

    def coverable(v: int) -> bool:
        missing = fullk & ~covered[v]
        if missing.bit_count() > open_cnt[v]:
            return False
        pool = 0
        for u in closed[v]:
            if not colors[u]:
                pool |= avail[u]
        return missing & ~pool == 0

    def solve(used: int) -> Iterator[list[int]]:
        best, best_cnt = -1, k + 1
        for v in range(n):
            if not colors[v]:
                cnt = avail[v].bit_count()
                if cnt < best_cnt:
                    best, best_cnt = v, cnt
        if best < 0:
            yield colors
            return
        v = best
        options = avail[v]
        if break_symmetry:
            fresh = options & ~used
            if fresh:
                options = (options & used) | (fresh & -fresh)
        for c in iter_bits(options):
            bit = 1 << c
            colors[v] = c + 1
            touched = []
            for u in nbrs[v]:
                if not colors[u] and avail[u] & bit:
                    avail[u] ^= bit
                    touched.append(u)
            prev_cov = []
            for u in closed[v]:
                prev_cov.append(covered[u])
                covered[u] |= bit
                open_cnt[u] -= 1
            if all(coverable(x) for x in reach[v]):
                yield from solve(used | bit)
            for u, cov in zip(closed[v], prev_cov):
                covered[u] = cov
                open_cnt[u] += 1
            for u in touched:
                avail[u] |= bit
            colors[v] = 0

    if all(coverable(v) for v in range(n)):
        yield from solve(0)


def search_frozen(g: Graph, k: int) -> Optional[ProperColoring]:
    """Some frozen k-coloring of ``g``, found by constraint backtracking, or None."""
    if k < 1:
        raise InvalidK(f"k must be >= 1, got {k}")
    if g.n == 0:
        return ProperColoring(k, ())
    if g.min_degree() < k - 1:
        return None
    for found in _frozen_search(g, k, break_symmetry=True):
        return ProperColoring(k, tuple(found))
    return None


def all_frozen(g: Graph, k: int) -> Iterator[ProperColoring]:
    """Every frozen k-coloring of ``g`` (no symmetry breaking)."""
    if k < 1:
        raise InvalidK(f"k must be >= 1, got {k}")
    if g.n == 0:
        yield ProperColoring(k, ())
        return
    if g.min_degree() < k - 1:
        return
    for found in _frozen_search(g, k, break_symmetry=False):
        yield ProperColoring(k, tuple(found))
