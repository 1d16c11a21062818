"""Colorings and the predicates that define b-chromatic colorings.

A proper k-coloring maps vertices to {0..k-1} with no monochromatic edge.
A b-vertex of color i sees every other color in its neighborhood; a
coloring is b-chromatic when every color has a b-vertex.  ``m_degree``
gives the classical upper bound on how many colors a b-chromatic coloring
can use: the largest m such that m vertices have degree >= m - 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .errors import ArityMismatch
from .graph import Graph


@dataclass(frozen=True)
class Coloring:
    """Total color assignment with a declared color count.

    ``colors`` travels with the assignment so an unused color is
    detectable: the b-vertex-per-color check needs to notice colors that
    never appear.
    """

    colors: int
    assignment: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(self.assignment))

    def color(self, v: int) -> int:
        return self.assignment[v]

    def to_json(self) -> dict:
        return {"colors": self.colors, "assignment": list(self.assignment)}

    @staticmethod
    def from_json(data: dict) -> "Coloring":
        return Coloring(data["colors"], tuple(data["assignment"]))

    def dump(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json(), fh)
            fh.write("\n")

    @staticmethod
    def load(path) -> "Coloring":
        with open(path, encoding="utf-8") as fh:
            return Coloring.from_json(json.load(fh))


@dataclass(frozen=True)
class BReport:
    """Verification certificate for a claimed b-chromatic coloring.

    ``b_vertices`` records ALL b-vertices per color (constructive tests
    need to confirm specific vertices are among them, not just one).  The
    rainbow picks the lowest-id b-vertex per color and is present exactly
    when the coloring is proper and no color lacks a b-vertex.
    """

    proper: bool
    violation: Optional[tuple[int, int]]
    b_vertices: tuple[tuple[int, ...], ...]
    rainbow: Optional[tuple[int, ...]]
    missing_colors: tuple[int, ...] = field(default=())

    @property
    def is_b_chromatic(self) -> bool:
        return self.rainbow is not None

    def to_json(self) -> dict:
        return {
            "proper": self.proper,
            "violation": list(self.violation) if self.violation else None,
            "b_vertices": {str(c): list(vs) for c, vs in enumerate(self.b_vertices)},
            "rainbow": list(self.rainbow) if self.rainbow is not None else None,
            "missing_colors": list(self.missing_colors),
        }


def _check_coverage(g: Graph, c: Coloring) -> None:
    if len(c.assignment) != g.order:
        raise ArityMismatch(
            f"coloring covers {len(c.assignment)} vertices, graph has {g.order}"
        )
    for v, col in enumerate(c.assignment):
        if not 0 <= col < c.colors:
            raise ArityMismatch(f"vertex {v} has color {col} outside 0..{c.colors - 1}")


def is_proper(g: Graph, c: Coloring) -> tuple[bool, Optional[tuple[int, int]]]:
    """True iff no edge is monochromatic; else the lexicographically first bad edge."""
    _check_coverage(g, c)
    for a in range(g.order):
        ca = c.assignment[a]
        for b in g.neighbors(a):
            if b > a and c.assignment[b] == ca:
                return False, (a, b)
    return True, None


def is_b_vertex(g: Graph, c: Coloring, v: int) -> bool:
    """True iff the colors around v include every color other than v's own."""
    seen = {c.assignment[w] for w in g.neighbors(v)}
    own = c.assignment[v]
    return all(col in seen for col in range(c.colors) if col != own)


def verify_b_coloring(g: Graph, c: Coloring) -> BReport:
    """Full certificate: properness, all b-vertices per color, rainbow or witness."""
    proper, violation = is_proper(g, c)
    by_color: list[list[int]] = [[] for _ in range(c.colors)]
    for v in range(g.order):
        if g.degree(v) >= c.colors - 1 and is_b_vertex(g, c, v):
            by_color[c.assignment[v]].append(v)
    missing = tuple(col for col, vs in enumerate(by_color) if not vs)
    rainbow = None
    if proper and not missing:
        rainbow = tuple(vs[0] for vs in by_color)
    return BReport(
        proper=proper,
        violation=violation,
        b_vertices=tuple(tuple(vs) for vs in by_color),
        rainbow=rainbow,
        missing_colors=missing,
    )


def m_degree(g: Graph) -> int:
    """Largest m such that the m-th largest degree is at least m - 1.

    Equals the count from the defining set once degrees are sorted
    non-increasingly, so ties need no special handling.
    """
    degs = sorted(g.degrees(), reverse=True)
    m = 0
    for idx, d in enumerate(degs):
        if d >= idx:
            m = idx + 1
        else:
            break
    return m
