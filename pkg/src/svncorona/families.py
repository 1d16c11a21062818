"""Base graph families: paths, cycles, stars, and complete graphs.

Conventions
-----------
- ``Path``/``Cycle``/``Complete`` sizes are vertex counts.
- ``Star`` size is the LEAF count, so ``Star(t)`` has order ``t + 1`` and its
  center is vertex 0.  Off-by-one mistakes here are the most common user
  error, so every public surface states it.
- Paths and cycles require order >= 3; complete graphs and stars are
  constructible from size 1 upward.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SizeTooSmall

KINDS = ("path", "cycle", "star", "complete")


@dataclass(frozen=True, order=True)
class FamilySpec:
    """One member of the four supported families.

    ``size`` is the order for path/cycle/complete and the leaf count for
    star (order ``size + 1``).
    """

    kind: str
    size: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SizeTooSmall(f"unknown family kind {self.kind!r}")
        minimum = 3 if self.kind in ("path", "cycle") else 1
        if self.size < minimum:
            raise SizeTooSmall(f"{self.kind} requires size >= {minimum}, got {self.size}")

    @property
    def order(self) -> int:
        return self.size + 1 if self.kind == "star" else self.size

    def edge_list(self) -> list[tuple[int, int]]:
        """Canonical edges, each as (a, b) with a < b."""
        n = self.size
        if self.kind == "path":
            return [(i, i + 1) for i in range(n - 1)]
        if self.kind == "cycle":
            return [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
        if self.kind == "star":
            return [(0, i) for i in range(1, n + 1)]
        return [(a, b) for a in range(n) for b in range(a + 1, n)]

    def __str__(self) -> str:
        return f"{self.kind}:{self.size}"


def parse_family(text: str) -> FamilySpec:
    """Parse a ``kind:size`` string such as ``path:7`` or ``star:4``."""
    kind, sep, size = text.partition(":")
    if not sep or kind not in KINDS:
        raise SizeTooSmall(f"expected <kind>:<size> with kind in {KINDS}, got {text!r}")
    try:
        value = int(size)
    except ValueError:
        raise SizeTooSmall(f"size is not an integer in {text!r}") from None
    return FamilySpec(kind, value)


def phi_base(spec: FamilySpec) -> int:
    """b-chromatic number of a base family member.

    Values: paths are 2 up to order 4 and then 3; cycles are 2 at order 4
    and 3 otherwise; stars are always 2; complete graphs equal their order.
    """
    n = spec.size
    if spec.kind == "path":
        return 2 if n in (3, 4) else 3
    if spec.kind == "cycle":
        return 2 if n == 4 else 3
    if spec.kind == "star":
        return 2
    return n


def chi_base(spec: FamilySpec) -> int:
    """Chromatic number of a base family member."""
    n = spec.size
    if spec.kind == "path":
        return 2
    if spec.kind == "cycle":
        return 2 if n % 2 == 0 else 3
    if spec.kind == "star":
        return 2
    return n


def optimal_base_assignment(spec: FamilySpec) -> list[int]:
    """An optimal b-chromatic coloring of a base family, as a color list.

    Uses ``phi_base(spec)`` colors and carries a b-vertex for every color;
    the pattern for 3-colored cycles adjusts the tail so the wrap-around
    edge stays proper.
    """
    n, k = spec.size, phi_base(spec)
    if spec.kind == "path":
        return [i % k for i in range(n)]
    if spec.kind == "cycle":
        if k == 2:
            return [i % 2 for i in range(n)]
        if n % 3 == 1:
            # ...0 1 2 | 0 1 0 2 keeps both ends of the wrap edge distinct.
            return [i % 3 for i in range(n - 4)] + [0, 1, 0, 2]
        return [i % 3 for i in range(n)]
    if spec.kind == "star":
        return [0] + [1] * n
    return list(range(n))
