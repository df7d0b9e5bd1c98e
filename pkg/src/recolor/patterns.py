"""Exact structural predicates: induced patterns, clique number, colorability."""

from __future__ import annotations

from typing import Optional

from .coloring import ProperColoring
from .errors import EmptyGraph, InvalidK, InvalidSize
from .graph import Graph, complete_graph, cycle_graph, iter_bits, path_graph


# -- named patterns ----------------------------------------------------------

def path_pattern(length: int) -> Graph:
    if length < 1:
        raise InvalidSize(f"path needs at least 1 vertex, got {length}")
    return path_graph(length)


def cycle_pattern(length: int) -> Graph:
    if length < 3:
        raise InvalidSize(f"cycle needs at least 3 vertices, got {length}")
    return cycle_graph(length)


def gem_pattern() -> Graph:
    """P4 on 0-1-2-3 plus vertex 4 complete to it."""
    rows = list(path_graph(4).rows) + [0b1111]
    rows = [r | (1 << 4) for r in rows[:4]] + [rows[4]]
    return Graph(5, tuple(rows))


def p5_complement_pattern() -> Graph:
    return path_graph(5).complement()


def complete_pattern(t: int) -> Graph:
    if t < 1:
        raise InvalidSize(f"complete graph needs at least 1 vertex, got {t}")
    return complete_graph(t)


# -- induced subgraph search -------------------------------------------------

def find_induced_path(g: Graph, length: int) -> Optional[list[int]]:
    """Vertices of an induced path on ``length`` vertices, in path order.

    DFS that only extends induced paths: the next vertex must neighbor the
    last one and avoid the closed neighborhoods of all earlier ones.
    """
    if length < 1:
        raise InvalidSize(f"path length must be >= 1, got {length}")
    if g.n < length:
        return None
    if length == 1:
        return [0]
    rows = g.rows
    path: list[int] = []

    def extend(last: int, blocked: int) -> bool:
        if len(path) == length:
            return True
        cand = rows[last] & ~blocked
        nxt_blocked = blocked | rows[last] | (1 << last)
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            path.append(w)
            if extend(w, nxt_blocked):
                return True
            path.pop()
        return False

    for s in range(g.n):
        path.append(s)
        if extend(s, 1 << s):
            return path
        path.pop()
    return None


def _search_order(p: Graph) -> list[int]:
    """Most-constrained-first order: each step takes the pattern vertex with the
    most edges into the already ordered set (ties: degree, then lowest index)."""
    remaining = set(range(p.n))
    order: list[int] = []
    placed = 0
    while remaining:
        v = max(
            remaining,
            key=lambda x: ((p.rows[x] & placed).bit_count(), p.degree(x), -x),
        )
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)
    return order


def find_induced(g: Graph, p: Graph) -> Optional[dict[int, int]]:
    """Injective map from V(p) into V(g) preserving adjacency and non-adjacency,
    or None.  Candidates are tried lowest index first."""
    if p.n == 0:
        return {}
    if p.n > g.n:
        return None
    if p == path_graph(p.n):
        found = find_induced_path(g, p.n)
        return None if found is None else dict(enumerate(found))

    order = _search_order(p)
    full = g.full
    image: dict[int, int] = {}
    used = 0

    def solve(depth: int) -> bool:
        nonlocal used
        if depth == len(order):
            return True
        a = order[depth]
        cand = full & ~used
        for b, gb in image.items():
            if p.rows[a] >> b & 1:
                cand &= g.rows[gb]
            else:
                cand &= ~g.rows[gb]
        need = p.degree(a)
        for w in iter_bits(cand):
            if g.degree(w) < need:
                continue
            image[a] = w
            used |= 1 << w
            if solve(depth + 1):
                return True
            used &= ~(1 << w)
            del image[a]
        return False

    if solve(0):
        return dict(sorted(image.items()))
    return None


def is_pl_free(g: Graph, length: int) -> bool:
    return find_induced_path(g, length) is None


def contains_induced(g: Graph, p: Graph) -> bool:
    return find_induced(g, p) is not None


# -- cliques ------------------------------------------------------------------

def _greedy_bound(rows: tuple[int, ...], cand: int) -> int:
    """Number of classes in a greedy sequential coloring of ``cand``."""
    classes = 0
    while cand:
        classes += 1
        q = cand
        while q:
            low = q & -q
            q &= ~rows[low.bit_length() - 1] & ~low
            cand &= ~low
    return classes


def max_clique(g: Graph) -> list[int]:
    """Lexicographically first maximum clique, as a sorted vertex list.

    Branch and bound over bitset candidate sets.  Candidates are expanded in
    ascending order and only strictly better cliques replace the incumbent, so
    the first maximum clique found is the lexicographically smallest one.
    """
    if g.n == 0:
        raise EmptyGraph("clique number of the empty graph is undefined")
    rows = g.rows
    best: list[int] = []
    current: list[int] = []

    def grow(cand: int) -> None:
        nonlocal best
        if not cand:
            if len(current) > len(best):
                best = current.copy()
            return
        if len(current) + cand.bit_count() <= len(best):
            return
        if len(current) + _greedy_bound(rows, cand) <= len(best):
            return
        while cand:
            if len(current) + cand.bit_count() <= len(best):
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            current.append(v)
            grow(cand & rows[v])
            current.pop()

    grow(g.full)
    return best


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


# -- coloring -----------------------------------------------------------------

def greedy_coloring(g: Graph) -> list[int]:
    """DSATUR greedy coloring (1-based colors).  Ties go to the lowest index."""
    n = g.n
    colors = [0] * n
    seen = [0] * n  # bitmask of neighbor colors
    for _ in range(n):
        v = max(
            (x for x in range(n) if not colors[x]),
            key=lambda x: (seen[x].bit_count(), g.degree(x), -x),
        )
        c = 1
        while seen[v] >> (c - 1) & 1:
            c += 1
        colors[v] = c
        for u in iter_bits(g.rows[v]):
            seen[u] |= 1 << (c - 1)
    return colors


def _color_search(g: Graph, k: int, pre: list[int]) -> Optional[list[int]]:
    """Backtracking k-coloring extending the precolored vertices in ``pre``.

    Branches on the uncolored vertex with the fewest available colors and
    tries at most one not-yet-used color (colors are interchangeable).
    """
    n = g.n
    rows = g.rows
    colors = [0] * n
    avail = [(1 << k) - 1] * n
    max_used = 0
    for v, c in enumerate(pre):
        if not c:
            continue
        if not avail[v] >> (c - 1) & 1:
            return None
        colors[v] = c
        max_used = max(max_used, c)
        for u in iter_bits(rows[v]):
            avail[u] &= ~(1 << (c - 1))

    def solve(max_used: int) -> bool:
        best_v = -1
        best_cnt = k + 1
        for v in range(n):
            if not colors[v]:
                cnt = avail[v].bit_count()
                if cnt < best_cnt:
                    best_v, best_cnt = v, cnt
                    if cnt == 0:
                        return False
        if best_v < 0:
            return True
        v = best_v
        limit = min(max_used + 1, k)
        options = avail[v] & ((1 << limit) - 1)
        for c in iter_bits(options):
            bit = 1 << c
            colors[v] = c + 1
            touched = []
            for u in iter_bits(rows[v]):
                if not colors[u] and avail[u] & bit:
                    avail[u] ^= bit
                    touched.append(u)
            if solve(max(max_used, c + 1)):
                return True
            for u in touched:
                avail[u] |= bit
            colors[v] = 0
        return False

    return colors if solve(max_used) else None


def is_k_colorable(g: Graph, k: int) -> Optional[ProperColoring]:
    """A witness proper k-coloring, or None if none exists."""
    if k < 0:
        raise InvalidK(f"k must be nonnegative, got {k}")
    if g.n == 0:
        return ProperColoring(k, ())
    if k == 0:
        return None
    clique = max_clique(g)
    if len(clique) > k:
        return None
    pre = [0] * g.n
    for i, v in enumerate(clique):
        pre[v] = i + 1
    found = _color_search(g, k, pre)
    return None if found is None else ProperColoring(k, tuple(found))


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        raise EmptyGraph("chromatic number of the empty graph is undefined")
    clique = max_clique(g)
    upper = max(greedy_coloring(g))
    pre = [0] * g.n
    for i, v in enumerate(clique):
        pre[v] = i + 1
    for k in range(len(clique), upper):
        if _color_search(g, k, pre) is not None:
            return k
    return upper


def optimal_coloring(g: Graph) -> ProperColoring:
    """A proper coloring with exactly chromatic_number(g) colors."""
    chi = chromatic_number(g)
    witness = is_k_colorable(g, chi)
    assert witness is not None
    return witness
