"""Closed-form b-chromatic numbers for coronas of the four families.

Every supported (left, right) pair maps to a value through a small case
table keyed on (n, t), where n is the left size and t the right size
(stars measured in leaves).  Star-left values come from one reduction:
when the right graph's maximum degree is small enough, the value is
min(n, order(H) + 2) + phi(H); the star-star table has its own small-n
branches.  Complete-left pairs are only covered while the corona's
m-degree stays within n + 2; everything outside that is reported as
unsupported rather than guessed.

Each branch carries a stable slug (used in reports and the CLI) that names
the produced value, e.g. ``cycle-star:2n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .errors import OutOfTheoremRange
from .families import FamilySpec, phi_base

# A branch: (slug, match(n, t), value(n, t) or None when unsupported).
Branch = tuple[str, Callable[[int, int], bool], Optional[Callable[[int, int], int]]]


@dataclass(frozen=True)
class PhiResult:
    supported: bool
    value: Optional[int]
    branch: str

    def __str__(self) -> str:
        if not self.supported:
            return f"unsupported ({self.branch})"
        return f"{self.value} ({self.branch})"


def _path_path() -> list[Branch]:
    return [
        ("path-path:4", lambda n, t: n == 3 and t <= 4, lambda n, t: 4),
        ("path-path:5", lambda n, t: (n == 3 and t >= 5) or n in (4, 5), lambda n, t: 5),
        ("path-path:n-1", lambda n, t: 6 <= n <= 2 * t + 3, lambda n, t: n - 1),
        ("path-path:2t+3", lambda n, t: n > 2 * t + 3, lambda n, t: 2 * t + 3),
    ]


def _path_cycle() -> list[Branch]:
    return [
        ("path-cycle:4", lambda n, t: (n, t) == (3, 4), lambda n, t: 4),
        ("path-cycle:5", lambda n, t: (n == 3 and t != 4) or n in (4, 5), lambda n, t: 5),
        ("path-cycle:n-1", lambda n, t: 6 <= n <= 2 * t + 3, lambda n, t: n - 1),
        ("path-cycle:2t+3", lambda n, t: n > 2 * t + 3, lambda n, t: 2 * t + 3),
    ]


def _path_star() -> list[Branch]:
    # Right operand S_t has order t + 1; the generic cap is 2(t+1) + 3.
    return [
        ("path-star:2n-1", lambda n, t: 2 * n <= t + 3, lambda n, t: 2 * n - 1),
        ("path-star:t+2", lambda n, t: n == (t + 5) // 2, lambda n, t: t + 2),
        ("path-star:t+3", lambda n, t: (t + 5) // 2 < n <= t + 4, lambda n, t: t + 3),
        ("path-star:n-1", lambda n, t: t + 4 < n <= 2 * t + 5, lambda n, t: n - 1),
        ("path-star:2t+5", lambda n, t: n > 2 * t + 5, lambda n, t: 2 * t + 5),
    ]


def _path_complete() -> list[Branch]:
    return [
        ("path-complete:t+2", lambda n, t: n <= t + 3, lambda n, t: t + 2),
        ("path-complete:n-1", lambda n, t: t + 3 < n <= 2 * t + 3, lambda n, t: n - 1),
        ("path-complete:2t+3", lambda n, t: n > 2 * t + 3, lambda n, t: 2 * t + 3),
    ]


def _cycle_vs(right: str) -> list[Branch]:
    return [
        (f"cycle-{right}:5", lambda n, t: n in (3, 4), lambda n, t: 5),
        (f"cycle-{right}:n", lambda n, t: 5 <= n <= 2 * t + 2, lambda n, t: n),
        (f"cycle-{right}:2t+3", lambda n, t: n > 2 * t + 2, lambda n, t: 2 * t + 3),
    ]


def _cycle_star() -> list[Branch]:
    return [
        ("cycle-star:2n", lambda n, t: 2 * n <= t + 3, lambda n, t: 2 * n),
        ("cycle-star:t+3", lambda n, t: (t + 3) // 2 < n <= t + 2, lambda n, t: t + 3),
        ("cycle-star:n", lambda n, t: t + 3 <= n <= 2 * t + 4, lambda n, t: n),
        ("cycle-star:2t+5", lambda n, t: n > 2 * t + 4, lambda n, t: 2 * t + 5),
    ]


def _cycle_complete() -> list[Branch]:
    return [
        ("cycle-complete:t+2", lambda n, t: n <= t + 1, lambda n, t: t + 2),
        ("cycle-complete:n", lambda n, t: t + 1 < n <= 2 * t + 3, lambda n, t: n),
        ("cycle-complete:2t+3", lambda n, t: n > 2 * t + 3, lambda n, t: 2 * t + 3),
    ]


def _star_reduction(right_kind: str) -> list[Branch]:
    # phi(S_n corona H) = min(n, |V(H)| + 2) + phi(H) whenever every copy
    # vertex is degree-starved out of being a b-vertex; holds for paths,
    # cycles, and complete graphs of any covered size.
    def value(n: int, t: int) -> int:
        h = FamilySpec(right_kind, t)
        return min(n, h.order + 2) + phi_base(h)

    return [(f"star-{right_kind}:min+phi", lambda n, t: True, value)]


def _star_star() -> list[Branch]:
    return [
        ("star-star:2n+1", lambda n, t: 2 * n <= t + 1, lambda n, t: 2 * n + 1),
        ("star-star:t+2", lambda n, t: 2 * n > t + 1 and n < t, lambda n, t: t + 2),
        ("star-star:min+2", lambda n, t: n >= t, lambda n, t: min(n, t + 3) + 2),
    ]


def _complete_path() -> list[Branch]:
    return [
        (
            "complete-path:n+1",
            lambda n, t: t == 3 and (n == 2 or n >= 7),
            lambda n, t: n + 1,
        ),
        (
            "complete-path:n+2",
            lambda n, t: (n == 2 and t > 3) or n in (3, 4) or (t >= 4 and n >= 2 * t + 1),
            lambda n, t: n + 2,
        ),
        ("complete-path:unsupported", lambda n, t: 5 <= n < 2 * t + 1, None),
    ]


def _complete_cycle() -> list[Branch]:
    return [
        (
            "complete-cycle:n+1",
            lambda n, t: t == 4 and (n == 2 or n >= 9),
            lambda n, t: n + 1,
        ),
        (
            "complete-cycle:n+2",
            lambda n, t: (n == 2 and t != 4) or n in (3, 4) or (t != 4 and n >= 2 * t + 1),
            lambda n, t: n + 2,
        ),
        ("complete-cycle:unsupported", lambda n, t: 5 <= n < 2 * t + 1, None),
    ]


def _complete_star() -> list[Branch]:
    # Outside n >= 2t+3 the corona's m-degree exceeds n + 2 (or, at n = 2,
    # no case table covers the pair), so no closed form is claimed.
    return [
        ("complete-star:n", lambda n, t: n == 2 * t + 3, lambda n, t: n),
        ("complete-star:n+1", lambda n, t: n >= 2 * t + 4, lambda n, t: n + 1),
        ("complete-star:unsupported", lambda n, t: n < 2 * t + 3, None),
    ]


def _complete_complete() -> list[Branch]:
    return [
        ("complete-complete:n-1", lambda n, t: t == 1 and n > 4 and n % 2 == 0, lambda n, t: n - 1),
        (
            "complete-complete:n",
            lambda n, t: (t == 1 and (n % 2 == 1 or n in (2, 4))) or (n, t) == (5, 2),
            lambda n, t: n,
        ),
        (
            "complete-complete:n+1",
            lambda n, t: t == 2 and n != 4 and n != 5,
            lambda n, t: n + 1,
        ),
        (
            "complete-complete:n+2",
            lambda n, t: (t == 2 and n == 4) or (t == 3 and (n <= 4 or n >= 7)),
            lambda n, t: n + 2,
        ),
        (
            "complete-complete:unsupported",
            lambda n, t: t >= 4 or (t == 3 and n in (5, 6)),
            None,
        ),
    ]


TABLES: dict[tuple[str, str], list[Branch]] = {
    ("path", "path"): _path_path(),
    ("path", "cycle"): _path_cycle(),
    ("path", "star"): _path_star(),
    ("path", "complete"): _path_complete(),
    ("cycle", "path"): _cycle_vs("path"),
    ("cycle", "cycle"): _cycle_vs("cycle"),
    ("cycle", "star"): _cycle_star(),
    ("cycle", "complete"): _cycle_complete(),
    ("star", "path"): _star_reduction("path"),
    ("star", "cycle"): _star_reduction("cycle"),
    ("star", "star"): _star_star(),
    ("star", "complete"): _star_reduction("complete"),
    ("complete", "path"): _complete_path(),
    ("complete", "cycle"): _complete_cycle(),
    ("complete", "star"): _complete_star(),
    ("complete", "complete"): _complete_complete(),
}

# Smallest (n, t) each table claims to cover; the partition test sweeps
# these rectangles and demands exactly one matching branch per cell.
def domain_minimums(left_kind: str, right_kind: str) -> tuple[int, int]:
    n_min = 2 if left_kind == "complete" else 3
    t_min = 1 if right_kind == "complete" else 3
    return n_min, t_min


def phi_closed_form(left: FamilySpec, right: FamilySpec) -> PhiResult:
    """Exact value and branch label, or supported=False outside the tables."""
    if left.kind == "star" and left.size < 3:
        raise OutOfTheoremRange(f"star-left tables require >= 3 leaves, got {left.size}")
    if left.kind == "complete" and left.size == 1:
        # An edgeless left operand collapses the corona to disjoint pieces.
        return PhiResult(False, None, "complete-*:k1-left")

    n_min, t_min = domain_minimums(left.kind, right.kind)
    n, t = left.size, right.size
    if n < n_min:
        raise OutOfTheoremRange(f"{left.kind} left operand needs size >= {n_min}")
    if t < t_min:
        return PhiResult(False, None, f"{left.kind}-{right.kind}:t-below-tables")

    for slug, match, value in TABLES[(left.kind, right.kind)]:
        if match(n, t):
            if value is None:
                return PhiResult(False, None, slug)
            return PhiResult(True, value(n, t), slug)
    raise AssertionError(f"case tables have a gap at {left} x {right}")
