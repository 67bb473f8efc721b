"""The cut coproduct and the Hopf algebras of (labeled) rooted forests."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .forests import Family, Forest, admissible_cuts, enumerate_forests, graded_product, split_cut, unit
from .linear import GradedBialgebra, LinComb, Tensor


def delta_cut(forest: Forest) -> LinComb:
    """Sum of Lea (x) Roo over all admissible cuts."""
    out = LinComb()
    for cut in admissible_cuts(forest):
        out.add(Tensor(split_cut(forest, cut)))
    return out


CUT_FAMILIES = {
    "h-ck": Family.ROOTED,
    "h-ck-d": Family.ROOTED,
    "h-nck": Family.PLANAR,
    "h-nck-d": Family.PLANAR,
    "h-o": Family.ORDERED,
    "h-ho": Family.HEAP_ORDERED,
    "h-po": Family.PREORDERED,
    "h-hpo": Family.HEAP_PREORDERED,
}


def cut_hopf(name: str, atoms: Sequence[str] | None = None) -> GradedBialgebra:
    """One of the cut-coproduct Hopf algebras, graded by the number of vertices."""
    family = CUT_FAMILIES[name]
    if atoms is None:
        atoms = ("a", "b") if name.endswith("-d") else ("*",)
    atoms = tuple(atoms)

    @lru_cache(maxsize=None)
    def basis(n: int) -> list[Forest]:
        return enumerate_forests(family, n, "vertices", atoms=atoms)

    return GradedBialgebra(
        name=name,
        unit=unit(family),
        degree=lambda f: f.n_vertices,
        mul_basis=lambda f, g: LinComb.of(graded_product(f, g)),
        comul_basis=lru_cache(maxsize=None)(delta_cut),
        basis=basis,
    )
