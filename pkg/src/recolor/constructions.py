"""Graph families: M_k, G_{t,k}, the lifting operation, the two C5 expansions,
the ten basic graphs G1..G10 and the identification fixtures.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Sequence

from .coloring import ProperColoring
from .errors import RecolorError, BadIndex, ChiOmegaMismatch, InvalidK, NotFrozen, NotPlFree, OutOfRange
from .graph import Graph, build_graph, complete_graph, cycle_graph, disjoint_union, expand, identify, iter_bits
from .patterns import chromatic_number, clique_number, is_pl_free, max_clique
from .recoloring import is_frozen


# -- M_k ----------------------------------------------------------------------

def build_mk(k: int) -> tuple[Graph, ProperColoring]:
    """K_{k,k} minus the perfect matching a_i b_i, with c(a_i) = c(b_i) = i.

    Vertex order a_1..a_k, b_1..b_k.
    """
    if k < 2:
        raise InvalidK(f"M_k needs k >= 2, got {k}")
    edges = [(i, k + j) for i in range(k) for j in range(k) if i != j]
    labels = [f"a{i + 1}" for i in range(k)] + [f"b{i + 1}" for i in range(k)]
    g = build_graph(2 * k, edges, labels)
    return g, ProperColoring(k, tuple(list(range(1, k + 1)) * 2))


# -- G_{t,k} ------------------------------------------------------------------

@dataclass(frozen=True)
class GtkLabels:
    """phi and alpha as 1-based color vectors over u_1..u_{2k} (index 0 is u_1)."""

    t: int
    k: int
    phi: tuple[int, ...]
    alpha: tuple[int, ...]
    pair_sequence: tuple[tuple[int, int], ...]

    def pairs(self) -> list[tuple[int, int]]:
        """The (phi, alpha) label on each vertex."""
        return list(zip(self.phi, self.alpha))

    def phi_coloring(self) -> ProperColoring:
        return ProperColoring(self.k, self.phi)

    def alpha_coloring(self) -> ProperColoring:
        return ProperColoring(self.t, self.alpha)


def gtk_pair_sequence(t: int, k: int) -> list[tuple[int, int]]:
    """Ordered alpha-pairs for the k phi-classes.

    The first t are the cyclic pairs (i, i mod t + 1); the rest come from the
    remaining 2-subsets of {1..t} in lexicographic order, smaller color first.
    """
    cyclic = [(i, i % t + 1) for i in range(1, t + 1)]
    taken = {frozenset(p) for p in cyclic}
    rest = [p for p in combinations(range(1, t + 1), 2) if frozenset(p) not in taken]
    return (cyclic + rest)[:k]


def gtk_edge_rule(phi: Sequence[int], alpha: Sequence[int]) -> list[tuple[int, int]]:
    n = len(phi)
    return [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if phi[i] != phi[j] and alpha[i] != alpha[j]
    ]


def build_gtk(t: int, k: int) -> tuple[Graph, GtkLabels]:
    """P5-free t-chromatic graph on 2k vertices with frozen k-coloring phi."""
    if t < 4 or not t + 1 <= k <= t * (t - 1) // 2:
        raise OutOfRange(f"need t >= 4 and t+1 <= k <= C(t,2); got t={t}, k={k}")
    seq = gtk_pair_sequence(t, k)
    phi: list[int] = []
    alpha: list[int] = []
    for i, (a, b) in enumerate(seq, start=1):
        phi += [i, i]
        alpha += [a, b]
    labels = [f"u{i + 1}" for i in range(2 * k)]
    g = build_graph(2 * k, gtk_edge_rule(phi, alpha), labels)
    return g, GtkLabels(t, k, tuple(phi), tuple(alpha), tuple(seq))


def gtk_range() -> list[tuple[int, int]]:
    """All (t, k) with 4 <= t <= 6 and t+1 <= k <= C(t,2)."""
    return [(t, k) for t in range(4, 7) for k in range(t + 1, t * (t - 1) // 2 + 1)]


# -- lifting --------------------------------------------------------------------

def lift_once(g: Graph, c: ProperColoring) -> tuple[Graph, ProperColoring, list[int]]:
    """One lifting round without precondition checks.

    Colors are permuted so that the lowest vertex of the lexicographically
    first maximum clique gets color 1.  Each vertex of color class 1 gets a
    copy adjacent to its closed neighborhood; copies take color k+1.
    Returns the new graph, coloring, and the color-1 class that was copied.
    """
    v1 = max_clique(g)[0]
    old = c.assign[v1]
    c = c.permuted({old: 1, 1: old})
    cls = [v for v in range(g.n) if c.assign[v] == 1]
    n = g.n
    rows = list(g.rows)
    for i, v in enumerate(cls):
        u = n + i
        nb = g.rows[v] | (1 << v)
        rows.append(nb)
        for w in iter_bits(nb):
            rows[w] |= 1 << u
    labels = None
    if g.labels is not None:
        labels = list(g.labels) + [f"{g.label(v)}'" for v in cls]
    lifted = Graph(n + len(cls), tuple(rows), None if labels is None else tuple(labels))
    coloring = ProperColoring(c.k + 1, c.assign + (c.k + 1,) * len(cls))
    return lifted, coloring, cls


def lift(g: Graph, c: ProperColoring, s: int, ell: int) -> tuple[Graph, ProperColoring]:
    """Apply ``s`` lifting rounds to a P_ell-free graph with chi = omega and a
    frozen coloring; the result keeps P_ell-freeness and chi = omega, both
    raised by s, with a frozen (k+s)-coloring."""
    if s < 1:
        raise OutOfRange(f"number of rounds must be >= 1, got {s}")
    if not is_frozen(g, c):
        raise NotFrozen("the given coloring is not frozen")
    chi, omega = chromatic_number(g), clique_number(g)
    if chi != omega:
        raise ChiOmegaMismatch(f"chi={chi} but omega={omega}")
    if not is_pl_free(g, ell):
        raise NotPlFree(f"graph contains an induced P{ell}")
    for _ in range(s):
        g, c, _ = lift_once(g, c)
    return g, c


# -- C5 expansion witnesses -------------------------------------------------------

K1 = complete_graph(1)
K2 = complete_graph(2)


def k3c5_witnesses() -> tuple[Graph, Graph]:
    """C5 with two vertices blown up to K2: (adjacent pair, nonadjacent pair)."""
    c5 = cycle_graph(5).with_labels([f"x{i}" for i in range(1, 6)])
    adjacent = expand(c5, [K2, K2, K1, K1, K1])
    nonadjacent = expand(c5, [K2, K1, K2, K1, K1])
    return adjacent, nonadjacent


# -- basic graphs G1..G10 -----------------------------------------------------------

# Edge lists transcribed from the drawing coordinates.  Straight segments that
# pass through an intermediate vertex are read as a path through it; in G4 the
# segment ending at (0.5,2) is taken to end at x7 = (0.7,2), the only vertex on
# that line.
_BASIC_EDGES: dict[int, str] = {
    1: "12 15 23 34 45",
    2: "12 15 16 23 34 36 45 46",
    3: "12 15 16 23 27 34 36 45 46 47",
    4: "12 15 16 17 23 27 34 36 45 46 47",
    5: "12 15 16 17 18 23 27 34 36 38 45 46 47",
    6: "12 15 16 17 23 27 28 34 36 45 46 47 58 68",
    7: "12 13 14 17 23 25 28 36 45 46 48 56 57",
    8: "12 15 16 17 23 28 34 37 45 46 48 57 68 78",
    9: "12 15 16 17 19 23 28 34 37 45 46 48 49 57 68 78",
    10: "12 15 16 17 23 28 29 34 37 39 45 46 48 57 59 68 69 78",
}
BASIC_ORDERS = {1: 5, 2: 6, 3: 7, 4: 7, 5: 8, 6: 8, 7: 8, 8: 8, 9: 9, 10: 9}


def _from_digits(n: int, spec: str) -> Graph:
    edges = [(int(p[0]) - 1, int(p[1]) - 1) for p in spec.split()]
    return build_graph(n, edges, [f"x{i}" for i in range(1, n + 1)])


def catalog(i: int) -> Graph:
    """Basic graph G_i (1 <= i <= 10); vertex j-1 carries label x_j."""
    if i not in _BASIC_EDGES:
        raise BadIndex(f"catalog index must be in 1..10, got {i}")
    return _from_digits(BASIC_ORDERS[i], _BASIC_EDGES[i])


def _k2_union(m: int) -> Graph:
    if m < 1:
        raise BadIndex(f"need at least one K2 component, got {m}")
    return disjoint_union([K2] * m)


def family_g1(m: int) -> Graph:
    """G1 = C5 with x1 expanded to m disjoint copies of K2."""
    g = catalog(1)
    parts = [_k2_union(m)] + [K1] * 4
    return expand(g, parts)


def family_g4(m: int) -> Graph:
    """G4 with x5 expanded to m disjoint copies of K2 (order 6 + 2m)."""
    g = catalog(4)
    parts = [K1] * 7
    parts[4] = _k2_union(m)
    return expand(g, parts)


def family_g10() -> Graph:
    return catalog(10)


# -- identification fixtures ------------------------------------------------------

class Fixture(NamedTuple):
    name: str
    graph: Graph
    coloring: ProperColoring
    source: Graph
    merged: tuple[str, str]
    claim: str


# The G4-family identification is drawn with its own labels: its x4 and x6 are
# x6 and x4 of G4 as drawn among the basic graphs.  Edges below use the basic-graph labels.
_G4_RELABEL = {"x4": "x6", "x6": "x4"}
_G4_K2_COUNT = 3


def _g4_identified() -> Fixture:
    source = family_g4(_G4_K2_COUNT)
    # identified graph as drawn: z joined to everything, path x7-x2-x3-x4(drawn)
    drawn_order = ["z", "x2", "x3"] + [f"x5.{i}" for i in range(1, 2 * _G4_K2_COUNT + 1)] + ["x6", "x7"]
    pos = {lab: i for i, lab in enumerate(drawn_order)}
    drawn_path = ["x7", "x2", "x3", "x4"]
    edges = [(pos["z"], pos[lab]) for lab in drawn_order if lab != "z"]
    for a, b in zip(drawn_path, drawn_path[1:]):
        a, b = _G4_RELABEL.get(a, a), _G4_RELABEL.get(b, b)
        edges.append((pos[a], pos[b]))
    for i in range(1, 2 * _G4_K2_COUNT, 2):
        edges.append((pos[f"x5.{i}"], pos[f"x5.{i + 1}"]))
    graph = build_graph(len(drawn_order), edges, drawn_order)
    # drawn colors: z=1, x2=2, x3=3, drawn x4 (= x6)=2, x7=3, each K2 bottom-up 3,2
    drawn = {"z": 1, "x2": 2, "x3": 3, "x6": 2, "x7": 3}
    for i in range(1, 2 * _G4_K2_COUNT + 1):
        drawn[f"x5.{i}"] = 3 if i % 2 else 2
    coloring = ProperColoring(3, tuple(drawn[lab] for lab in drawn_order))
    claim = "identifying x1 and x4 in a G4-family graph leaves a P5-free 3-colorable graph"
    return Fixture("g4-identified", graph, coloring, source, ("x1", "x4"), claim)


def _g10_identified() -> Fixture:
    source = family_g10()
    order = ["x1", "z", "x3", "x4", "x5", "x7", "x8", "x9"]
    pos = {lab: i for i, lab in enumerate(order)}
    drawn_edges = (
        "x1-z z-x3 x3-x4 x4-x5 x4-x8 x3-x7 z-x8 x1-x5 x1-x7 "
        "x5-x9 x3-x9 z-x9 x5-x7 x7-x8 x4-z"
    )
    edges = [tuple(pos[p] for p in e.split("-")) for e in drawn_edges.split()]
    graph = build_graph(len(order), edges, order)
    drawn = {"x1": 3, "z": 2, "x3": 1, "x4": 3, "x5": 1, "x7": 2, "x8": 1, "x9": 3}
    coloring = ProperColoring(3, tuple(drawn[lab] for lab in order))
    claim = "identifying x2 and x6 in G10 leaves a P5-free 3-colorable graph"
    return Fixture("g10-identified", graph, coloring, source, ("x2", "x6"), claim)


def fixtures() -> list[Fixture]:
    return [_g4_identified(), _g10_identified()]


def fixture_provenance(f: Fixture) -> Graph:
    """The identification the fixture claims to depict, recomputed."""
    x, y = (f.source.index_of(lab) for lab in f.merged)
    return identify(f.source, x, y)


# -- construction spec strings ------------------------------------------------------

def parse_construction(spec: str) -> tuple[Graph, ProperColoring | None, dict]:
    """Build from a spec string such as ``gtk:4,5`` or ``lift:mk:3,1,6``.

    Returns (graph, canonical coloring or None, extra metadata).
    """
    kind, _, arg = spec.partition(":")
    try:
        if kind == "mk":
            g, c = build_mk(int(arg))
            return g, c, {}
        if kind == "gtk":
            t, k = (int(x) for x in arg.split(","))
            g, lab = build_gtk(t, k)
            return g, lab.phi_coloring(), {"pairs": [list(p) for p in lab.pairs()], "alpha": list(lab.alpha)}
        if kind == "lift":
            base, s, ell = arg.rsplit(",", 2)
            g, c, _ = parse_construction(base)
            if c is None:
                raise ValueError(f"base construction {base!r} carries no coloring")
            g2, c2 = lift(g, c, int(s), int(ell))
            return g2, c2, {}
        if kind == "k3c5":
            adj, nonadj = k3c5_witnesses()
            if arg == "adj":
                return adj, None, {}
            if arg == "nonadj":
                return nonadj, None, {}
            raise ValueError("k3c5 takes adj or nonadj")
        if kind == "catalog":
            return catalog(int(arg)), None, {}
        if kind == "g4fam":
            return family_g4(int(arg)), None, {}
        if kind == "g1fam":
            return family_g1(int(arg)), None, {}
        if kind == "g10fam":
            return family_g10(), None, {}
    except RecolorError:
        raise
    except (TypeError, ValueError) as exc:
        raise ValueError(f"bad construction spec {spec!r}: {exc}") from None
    raise ValueError(f"unknown construction {kind!r}")
