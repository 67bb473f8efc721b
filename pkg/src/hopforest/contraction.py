"""Edge contraction: Part/Cont, quotient normal forms and the contraction Hopf algebras.

An edge is named by the vertex sitting on top of it (its preorder position),
so an edge subset is a set of non-root vertex ids.  In the quotients the
single vertex is identified with the unit: normal forms carry no isolated
vertices and their integer labels are packed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .forests import Family, Forest, canonical, enumerate_forests, from_flat, graded_product, ordered_to_planar, planar_to_ordered, unit
from .linear import GradedBialgebra, LinComb, Tensor


def edges(forest: Forest) -> list[int]:
    return [v for v, p in enumerate(forest.flat.parents) if p >= 0]


def edge_subsets(forest: Forest) -> list[frozenset[int]]:
    es = edges(forest)
    return [frozenset(c) for r in range(len(es) + 1) for c in combinations(es, r)]


def _check_edges(forest: Forest, e: Iterable[int]) -> frozenset[int]:
    e = frozenset(e)
    stray = e - set(edges(forest))
    if stray:
        raise ValueError(f"{sorted(stray)} are not edges of {forest}")
    return e


def part(forest: Forest, e: Iterable[int]) -> Forest:
    """All vertices of the forest, keeping only the edges of ``e``."""
    e = _check_edges(forest, e)
    flat = forest.flat
    parents = [p if v in e else -1 for v, p in enumerate(flat.parents)]
    return from_flat(flat.labels, parents, forest.family)


def component_roots(forest: Forest, e: Iterable[int]) -> list[int]:
    """For each vertex, the root of its connected component in Part_e."""
    flat = forest.flat
    comp: list[int] = []
    for v, p in enumerate(flat.parents):
        comp.append(comp[p] if v in e else v)
    return comp


def cont(forest: Forest, e: Iterable[int]) -> Forest:
    """Contract every edge of ``e``; a contracted vertex keeps its component root's label."""
    e = _check_edges(forest, e)
    flat = forest.flat
    comp = component_roots(forest, e)
    keep = [v for v in range(len(flat)) if v not in e]
    parents = [comp[p] if p >= 0 else -1 for p in flat.parents]
    return from_flat(flat.labels, parents, forest.family, keep)


def quotient_normal_form(forest: Forest) -> Forest:
    """Delete the isolated vertices and repack the labels."""
    if not forest.n_isolated:
        return forest
    return canonical((t for t in forest.trees if t.children), forest.family, relabel=True)


def contraction_terms(forest: Forest) -> list[tuple[frozenset[int], Forest, Forest]]:
    """(e, Part_e, Cont_e) for every edge subset, both legs in normal form."""
    return [(e, quotient_normal_form(part(forest, e)), quotient_normal_form(cont(forest, e))) for e in edge_subsets(forest)]


def delta_contraction(forest: Forest) -> LinComb:
    """Sum of Part_e (x) Cont_e over all edge subsets (multiplicities kept)."""
    out = LinComb()
    for _, p, c in contraction_terms(forest):
        out.add(Tensor((p, c)))
    return out


CONTRACTION_FAMILIES = {
    "c-ck": Family.ROOTED,
    "c-ck-d": Family.EDGE,
    "c-po": Family.PREORDERED,
    "c-o": Family.ORDERED,
    "c-ho": Family.HEAP_ORDERED,
    "c-hpo": Family.HEAP_PREORDERED,
}


def contraction_hopf(name: str, atoms: Sequence[str] | None = None) -> GradedBialgebra:
    """One of the contraction Hopf algebras, graded by the number of edges."""
    family = CONTRACTION_FAMILIES[name]
    if atoms is None:
        atoms = ("a", "b") if family is Family.EDGE else ("*",)
    atoms = tuple(atoms)

    @lru_cache(maxsize=None)
    def basis(n: int) -> list[Forest]:
        return enumerate_forests(family, n, "edges", quotient=True, atoms=atoms)

    return GradedBialgebra(
        name=name,
        unit=unit(family),
        degree=lambda f: f.n_edges,
        mul_basis=lambda f, g: LinComb.of(graded_product(f, g)),
        comul_basis=lru_cache(maxsize=None)(delta_contraction),
        basis=basis,
    )


# ---------------------------------------------------------------------------
# the planar comodule


def in_planar_image(forest: Forest) -> bool:
    """Whether a heap-ordered forest is the depth-first numbering of a planar forest."""
    return forest.family is Family.HEAP_ORDERED and planar_to_ordered(ordered_to_planar(forest)) == forest


@dataclass
class CoactionReport:
    max_edges: int
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def coaction_check(max_edges: int) -> CoactionReport:
    """Every right leg of the contraction coproduct of a planar forest stays planar."""
    report = CoactionReport(max_edges)
    for n in range(1, max_edges + 1):
        for planar in enumerate_forests(Family.PLANAR, n, "edges", quotient=True):
            image = planar_to_ordered(planar)
            for (left, right), _ in delta_contraction(image).items():
                report.checked += 1
                if left.family is not Family.HEAP_ORDERED or not in_planar_image(right):
                    report.violations.append(f"{planar}: {left} (x) {right}")
    return report
