"""Exact search: chromatic number and b-chromatic number on small graphs.

This is the ground truth the closed forms are checked against.  Both
solvers are deterministic branch-and-bound backtrackers:

- ``exact_chromatic``: DSATUR greedy upper bound, greedy clique lower
  bound, then standard sequential B&B.
- ``exists_b_coloring``: decides k-b-colorability by choosing k candidate
  b-vertices (one per color, degree >= k-1 required) and extending by
  backtracking.  Symmetry is broken by forcing the candidates to be chosen
  in increasing vertex order with color i on the i-th one, which kills the
  k! color-permutation factor; any b-coloring can be renamed into that
  canonical shape, so the search is complete.
- ``exact_b_chromatic``: scans k downward from min(m_degree, max_degree+1)
  and returns the first k that admits a b-coloring.  b-colorability is NOT
  monotone in k, so every k is decided independently; the first success is
  still the maximum because the scan is descending.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .coloring import Coloring, m_degree, verify_b_coloring
from .errors import BudgetExceeded
from .graph import Graph


@dataclass(frozen=True)
class SearchBudget:
    max_vertices: int = 20
    time_limit: float = 120.0
    node_limit: Optional[int] = None

    def __post_init__(self):
        if self.max_vertices <= 0 or self.time_limit <= 0:
            raise ValueError("budget fields must be positive")
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("budget fields must be positive")


class _Ticker:
    """Shared node/time accounting for one solver call."""

    def __init__(self, budget: SearchBudget, what: str, bounds=lambda: (None, None)):
        self.deadline = time.monotonic() + budget.time_limit
        self.node_limit = budget.node_limit
        self.nodes = 0
        self.what = what
        self.bounds = bounds

    def tick(self):
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise BudgetExceeded(f"{self.what}: node limit reached", self.bounds())
        if self.nodes % 4096 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded(f"{self.what}: time limit reached", self.bounds())


def greedy_clique(g: Graph) -> list[int]:
    """Greedy clique grown from high-degree vertices; a chromatic lower bound."""
    order = sorted(range(g.order), key=lambda v: (-g.degree(v), v))
    clique: list[int] = []
    for v in order:
        if all(g.has_edge(v, u) for u in clique):
            clique.append(v)
    return clique


def dsatur_upper_bound(g: Graph) -> Coloring:
    """Greedy DSATUR coloring; deterministic tie-break by degree then id."""
    n = g.order
    color = [-1] * n
    sat: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max(
            (u for u in range(n) if color[u] < 0),
            key=lambda u: (len(sat[u]), g.degree(u), -u),
        )
        used = {color[w] for w in g.neighbors(v) if color[w] >= 0}
        c = 0
        while c in used:
            c += 1
        color[v] = c
        for w in g.neighbors(v):
            sat[w].add(c)
    k = max(color, default=-1) + 1
    return Coloring(max(k, 1), tuple(color)) if n else Coloring(1, ())


def exact_chromatic(g: Graph, budget: SearchBudget = SearchBudget()) -> int:
    """Chromatic number by branch-and-bound; requires order <= budget.max_vertices."""
    if g.order == 0:
        return 0
    if g.order > budget.max_vertices:
        raise BudgetExceeded(
            f"graph order {g.order} exceeds max_vertices {budget.max_vertices}",
            (1, g.order),
        )
    clique = greedy_clique(g)
    lower = len(clique)
    best = dsatur_upper_bound(g).colors
    if lower == best:
        return best

    # Clique vertices first (pre-colored 0..lower-1), the rest by degree.
    rest = sorted((v for v in range(g.order) if v not in clique), key=lambda v: (-g.degree(v), v))
    order = clique + rest
    ticker = _Ticker(SearchBudget(budget.max_vertices, budget.time_limit, budget.node_limit),
                     "exact_chromatic", lambda: (lower, best))
    color = {v: i for i, v in enumerate(clique)}

    def extend(pos: int, used: int) -> None:
        nonlocal best
        if used >= best:
            return
        if pos == len(order):
            best = used
            return
        ticker.tick()
        v = order[pos]
        banned = {color[w] for w in g.neighbors(v) if w in color}
        for c in range(min(used + 1, best - 1)):
            if c in banned:
                continue
            color[v] = c
            extend(pos + 1, max(used, c + 1))
            del color[v]
            if best == lower:
                return

    extend(len(clique), lower)
    return best


def _b_candidates(g: Graph, k: int) -> list[int]:
    return [v for v in range(g.order) if g.degree(v) >= k - 1]


def exists_b_coloring(
    g: Graph, k: int, budget: SearchBudget = SearchBudget()
) -> Optional[Coloring]:
    """A proper k-coloring with a b-vertex for every color, or None.

    Exhaustive for the given k: a None return is a proof of non-existence
    (within budget; running out raises instead of guessing).
    """
    if k <= 0:
        return None
    n = g.order
    if k > n:
        return None
    if k == 1:
        if g.num_edges:
            return None
        return Coloring(1, (0,) * n)

    candidates = _b_candidates(g, k)
    if len(candidates) < k:
        return None

    ticker = _Ticker(budget, f"exists_b_coloring(k={k})")
    neighbor_sets = [set(g.neighbors(v)) for v in range(n)]

    def try_candidates(chosen: tuple[int, ...]) -> Optional[Coloring]:
        color: dict[int, int] = {}
        for i, r in enumerate(chosen):
            # Two adjacent candidates with forced colors are fine; identical
            # colors cannot happen since all k candidate colors differ.
            color[r] = i
        chosen_set = set(chosen)
        # needed[i]: colors candidate i still has to see among its neighbors
        needed: list[set[int]] = []
        for i, r in enumerate(chosen):
            seen = {color[w] for w in neighbor_sets[r] if w in color}
            needed.append(set(range(k)) - {i} - seen)
        free = [v for v in range(n) if v not in chosen_set]
        # Vertices adjacent to many candidates are the most constrained.
        free.sort(key=lambda v: (-len(neighbor_sets[v] & chosen_set), -g.degree(v), v))
        watchers = [
            [i for i, r in enumerate(chosen) if v in neighbor_sets[r]] for v in free
        ]
        remaining = [sum(1 for v in free if v in neighbor_sets[r]) for r in chosen]

        def feasible(i: int) -> bool:
            return len(needed[i]) <= remaining[i]

        def assign(pos: int) -> bool:
            if pos == len(free):
                return all(not needed[i] for i in range(k))
            ticker.tick()
            v = free[pos]
            banned = {color[w] for w in neighbor_sets[v] if w in color}
            for c in range(k):
                if c in banned:
                    continue
                color[v] = c
                touched = []
                ok = True
                for i in watchers[pos]:
                    remaining[i] -= 1
                    if c in needed[i]:
                        needed[i].discard(c)
                        touched.append(i)
                    if not feasible(i):
                        ok = False
                if ok and assign(pos + 1):
                    return True
                for i in watchers[pos]:
                    remaining[i] += 1
                for i in touched:
                    needed[i].add(c)
                del color[v]
            return False

        if assign(0):
            assignment = tuple(color[v] for v in range(n))
            return Coloring(k, assignment)
        return None

    from itertools import combinations

    for chosen in combinations(candidates, k):
        # Candidate i must be able to see k-1 colors among its neighbors.
        if any(g.degree(r) < k - 1 for r in chosen):
            continue
        result = try_candidates(chosen)
        if result is not None:
            report = verify_b_coloring(g, result)
            assert report.is_b_chromatic
            return result
    return None


def exact_b_chromatic(g: Graph, budget: SearchBudget = SearchBudget()) -> int:
    """Maximum k admitting a b-chromatic k-coloring, decided per k, scanning down."""
    if g.order == 0:
        return 0
    if g.order > budget.max_vertices:
        raise BudgetExceeded(
            f"graph order {g.order} exceeds max_vertices {budget.max_vertices}",
            (None, None),
        )
    chi = exact_chromatic(g, budget)
    upper = min(m_degree(g), g.max_degree() + 1, g.order)
    for k in range(upper, chi, -1):
        if exists_b_coloring(g, k, budget) is not None:
            return k
    # A b-coloring with chi colors always exists, so the scan bottoms out here.
    return chi


def exact_b_chromatic_with_coloring(
    g: Graph, budget: SearchBudget = SearchBudget()
) -> tuple[int, Coloring]:
    """Like exact_b_chromatic but also returns a witness coloring."""
    if g.order > budget.max_vertices:
        raise BudgetExceeded(
            f"graph order {g.order} exceeds max_vertices {budget.max_vertices}",
            (None, None),
        )
    chi = exact_chromatic(g, budget)
    upper = min(m_degree(g), g.max_degree() + 1, g.order)
    for k in range(upper, chi - 1, -1):
        witness = exists_b_coloring(g, k, budget)
        if witness is not None:
            return k, witness
    raise AssertionError("unreachable: chi-coloring search failed")
