"""Dimension tables, the heap-ordered contraction recursion and closed forms.

Every reference count is embedded below next to the enumeration it is
compared with, so drift between the data and the code shows up as a named
failure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial

from .forests import Family, enumerate_forests, packed_words
from .morphisms import heap_ordered_to_permutation


@dataclass(frozen=True)
class TableSpec:
    family: str  # a Family value, or "packed_words"
    grading: str
    quotient: bool
    start: int  # degree of the first listed value
    values: tuple[int, ...]
    count: str = "forests"  # or "trees"


# reference rows; each is checked against live enumeration
TABLES: dict[str, TableSpec] = {
    "rooted": TableSpec("rooted", "vertices", False, 0, (1, 1, 2, 4, 9, 20, 48)),
    "planar": TableSpec("planar", "vertices", False, 0, (1, 1, 2, 5, 14, 42, 132)),
    "ordered": TableSpec("ordered", "vertices", False, 0, tuple((n + 1) ** (n - 1) if n else 1 for n in range(6))),
    "heap_ordered": TableSpec("heap_ordered", "vertices", False, 0, tuple(factorial(n) for n in range(7))),
    "preordered": TableSpec("preordered", "vertices", False, 0, (1, 1, 5, 38, 424, 6284)),
    "heap_preordered": TableSpec("heap_preordered", "vertices", False, 0, (1, 1, 3, 12, 64, 428)),
    "packed_words": TableSpec("packed_words", "vertices", False, 0, (1, 1, 3, 13, 75, 541)),
    "c-ck": TableSpec("rooted", "edges", True, 0, (1, 1, 3, 7, 19, 47, 127)),
    "c-o": TableSpec("ordered", "edges", True, 1, (2, 9, 76, 805)),
    "c-ho": TableSpec("heap_ordered", "edges", True, 0, (0, 1, 5, 41, 469)),
    "c-nck-trees": TableSpec("planar", "edges", True, 1, (1, 2, 5, 14, 42), count="trees"),
    "c-nck": TableSpec("planar", "edges", True, 1, (1, 3, 10, 35, 126)),
}

# reference heap-ordered contraction counts by (edges n, trees l), rows n = 0..5
CHO_BY_LENGTH: tuple[tuple[int, ...], ...] = (
    (1, 0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0),
    (0, 2, 3, 0, 0, 0),
    (0, 6, 20, 15, 0, 0),
    (0, 24, 130, 210, 105, 0),
    (0, 120, 924, 2380, 2520, 945),
)


def count(family: str, grading: str, quotient: bool, n: int, what: str = "forests") -> int:
    if family == "packed_words":
        return len(packed_words(n))
    forests = enumerate_forests(Family(family), n, grading, quotient)
    return len(forests) if what == "forests" else sum(1 for f in forests if len(f.trees) == 1)


def dimension_table(family: str, grading: str = "vertices", quotient: bool = False, n_max: int = 5, start: int = 0) -> list[int]:
    return [count(family, grading, quotient, n) for n in range(start, n_max + 1)]


@dataclass
class TableCheck:
    name: str
    degrees: list[int]
    expected: list[int]
    computed: list[int]
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_table(name: str, n_max: int | None = None) -> TableCheck:
    row = TABLES[name]
    last = row.start + len(row.values) - 1 if n_max is None else min(n_max, row.start + len(row.values) - 1)
    degrees = list(range(row.start, last + 1))
    expected = list(row.values[: len(degrees)])
    computed = [count(row.family, row.grading, row.quotient, n, row.count) for n in degrees]
    report = TableCheck(name, degrees, expected, computed)
    for n, e, c in zip(degrees, expected, computed):
        if e != c:
            report.failures.append(f"{name}: degree {n} expected {e}, enumerated {c}")
    return report


# ---------------------------------------------------------------------------
# heap-ordered contraction forests


@lru_cache(maxsize=None)
def cho_recursion(n: int, l: int) -> int:
    """Forests with n edges and l trees, built by grafting the largest vertex."""
    if n < 0 or l < 0:
        return 0
    if n == 0:
        return 1 if l == 0 else 0
    if n == 1:
        return 1 if l == 1 else 0
    if l == 0:
        return 0
    return (n + l - 1) * (cho_recursion(n - 1, l) + cho_recursion(n - 1, l - 1))


def cho_count(n: int, l: int) -> int:
    return sum(1 for f in enumerate_forests(Family.HEAP_ORDERED, n, "edges", quotient=True) if len(f.trees) == l)


def cho_total(n: int) -> int:
    return sum(cho_recursion(n, l) for l in range(n + 1))


def fixed_point_free_check(max_vertices: int) -> list[str]:
    """The forest-to-permutation bijection on forests without isolated vertices:
    images must be distinct and fixed-point free, and there must be as many
    as there are derangements.  Returns the violations."""
    problems = []
    for n in range(1, max_vertices + 1):
        forests = [f for f in enumerate_forests(Family.HEAP_ORDERED, n) if not f.n_isolated]
        images = [heap_ordered_to_permutation(f) for f in forests]
        if len(set(images)) != len(images):
            problems.append(f"{n} vertices: the map is not injective")
        for f, p in zip(forests, images):
            if any(p[i] == i + 1 for i in range(n)):
                problems.append(f"{f} -> {p} has a fixed point")
        if len(images) != derangements(n):
            problems.append(f"{n} vertices: {len(images)} forests but {derangements(n)} derangements")
    return problems


def derangements(n: int) -> int:
    return sum((-1) ** k * factorial(n) // factorial(k) for k in range(n + 1))


# ---------------------------------------------------------------------------
# planar contraction forests


def cnck_closed_forms(n: int) -> tuple[int, int]:
    """(trees, forests) with n edges: the Catalan number and C(2n-1, n)."""
    if n < 1:
        raise ValueError("closed forms are stated for n >= 1")
    return comb(2 * n, n) // (n + 1), comb(2 * n - 1, n)
