"""Coloring value types shared by the predicate and reconfiguration modules.

Colors are 1-based at this surface (``1..k``).  The reconfiguration engine uses
0-based digits internally and converts at the boundary.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Sequence

from .errors import ImproperColoring, InvalidK, LengthMismatch, MalformedEncoding
from .graph import Graph, iter_bits


@dataclass(frozen=True)
class ProperColoring:
    k: int
    assign: tuple[int, ...]

    def __post_init__(self):
        if self.k < 0:
            raise InvalidK(f"palette size must be nonnegative, got {self.k}")
        object.__setattr__(self, "assign", tuple(int(c) for c in self.assign))
        for c in self.assign:
            if not 1 <= c <= self.k:
                raise ImproperColoring(f"color {c} outside 1..{self.k}")

    @classmethod
    def of(cls, g: Graph, assign: Sequence[int], k: int | None = None) -> "ProperColoring":
        """Validated coloring of ``g``; ``k`` defaults to the largest color used."""
        if k is None:
            k = max(assign, default=0)
        c = cls(k, tuple(assign))
        c.check(g)
        return c

    def check(self, g: Graph) -> None:
        if len(self.assign) != g.n:
            raise LengthMismatch(f"coloring has {len(self.assign)} entries, graph has {g.n} vertices")
        for u, v in g.edges():
            if self.assign[u] == self.assign[v]:
                raise ImproperColoring(f"edge ({u},{v}) is monochromatic with color {self.assign[u]}")

    def is_proper_for(self, g: Graph) -> bool:
        try:
            self.check(g)
        except (ImproperColoring, LengthMismatch):
            return False
        return True

    def __len__(self):
        return len(self.assign)

    def __getitem__(self, v: int) -> int:
        return self.assign[v]

    def code(self) -> int:
        """Base-k integer with vertex 0 as the least significant digit."""
        code = 0
        for c in reversed(self.assign):
            code = code * self.k + (c - 1)
        return code

    @classmethod
    def from_code(cls, code: int, n: int, k: int) -> "ProperColoring":
        digits = []
        for _ in range(n):
            code, d = divmod(code, k)
            digits.append(d + 1)
        return cls(k, tuple(digits))

    def permuted(self, perm: dict[int, int]) -> "ProperColoring":
        return ProperColoring(self.k, tuple(perm.get(c, c) for c in self.assign))

    def to_dict(self) -> dict[str, Any]:
        return {"k": self.k, "assign": list(self.assign)}

    @classmethod
    def from_dict(cls, obj: dict[str, Any]) -> "ProperColoring":
        try:
            return cls(int(obj["k"]), tuple(int(c) for c in obj["assign"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedEncoding(f"bad coloring JSON: {exc}") from None

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "ProperColoring":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedEncoding(f"invalid JSON: {exc}") from None
        if "coloring" in obj:
            obj = obj["coloring"]
        return cls.from_dict(obj)


@dataclass(frozen=True)
class RecoloringStep:
    vertex: int
    old: int
    new: int

    def __post_init__(self):
        if self.old == self.new:
            raise ValueError("a recoloring step must change the color")

    def to_dict(self) -> dict[str, int]:
        return {"vertex": self.vertex, "old": self.old, "new": self.new}


def missing_colors(g: Graph, c: ProperColoring, v: int) -> int:
    """Bitmask (bit i-1 for color i) of colors absent from the closed neighborhood of v."""
    seen = 1 << (c.assign[v] - 1)
    for u in iter_bits(g.rows[v]):
        seen |= 1 << (c.assign[u] - 1)
    return ((1 << c.k) - 1) & ~seen
