"""Grafting operations on edge-decorated trees.

A tree with at least one edge is a one-tree forest of the edge-decorated
family: the root is ``*`` and every other vertex carries the decoration of
the edge below it.  ``graft_root`` identifies two roots and ``graft_below``
glues the root of its first argument onto every non-root vertex of the second.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Sequence

from .forests import Family, Forest, Tree, canonical, enumerate_forests
from .linear import Echelon, LinComb, lin_extend_2


def edge_tree(root: Tree) -> Forest:
    return canonical((Tree("*", root.children),), Family.EDGE)


def _as_tree(x: Forest) -> Tree:
    if x.family is not Family.EDGE or len(x.trees) != 1 or not x.trees[0].children:
        raise ValueError(f"expected an edge-decorated tree with at least one edge, got {x}")
    return x.trees[0]


def single_edge(atom: str) -> Forest:
    return edge_tree(Tree("*", (Tree(atom),)))


def graft_root(t1: Forest, t2: Forest) -> Forest:
    """Identify the two roots."""
    return edge_tree(Tree("*", _as_tree(t1).children + _as_tree(t2).children))


def _attach_everywhere(t: Tree, extra: tuple[Tree, ...]) -> list[Tree]:
    # all ways to add ``extra`` as children of one vertex of t, t's own root included
    out = [Tree(t.label, t.children + extra)]
    for i, child in enumerate(t.children):
        for variant in _attach_everywhere(child, extra):
            out.append(Tree(t.label, t.children[:i] + (variant,) + t.children[i + 1 :]))
    return out


def graft_below(t1: Forest, t2: Forest) -> LinComb:
    """Sum over the non-root vertices s of t2 of t1 glued at s by its root."""
    extra = _as_tree(t1).children
    root = _as_tree(t2)
    out = LinComb()
    for i, child in enumerate(root.children):
        for variant in _attach_everywhere(child, extra):
            out.add(edge_tree(Tree("*", root.children[:i] + (variant,) + root.children[i + 1 :])))
    return out


def b_graft(decorations: Sequence[str], subtrees: Sequence[Forest | None]) -> Forest:
    """A new root carrying one edge per decoration, with the matching subtree on top.

    ``None`` or the empty forest stands for the empty tree (a bare edge).
    """
    if len(decorations) != len(subtrees):
        raise ValueError(f"{len(decorations)} decorations for {len(subtrees)} subtrees")
    if not decorations:
        raise ValueError("b_graft needs at least one edge")
    kids = []
    for d, t in zip(decorations, subtrees):
        above = () if t is None or t.is_unit else _as_tree(t).children
        kids.append(Tree(d, above))
    return edge_tree(Tree("*", tuple(kids)))


vee = lin_extend_2(lambda x, y: LinComb.of(graft_root(x, y)))
rhd = lin_extend_2(graft_below)


# ---------------------------------------------------------------------------
# relation checks


@dataclass
class PreLieReport:
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: PreLieReport) -> None:
        self.checked += other.checked
        self.failures += other.failures


def compre_lie_check(x: Mapping, y: Mapping, z: Mapping) -> PreLieReport:
    """Evaluate commutativity and the three defining identities on one triple."""
    report = PreLieReport()
    identities = {
        "vee commutative": (vee(x, y), vee(y, x)),
        "vee associative": (vee(vee(x, y), z), vee(x, vee(y, z))),
        "left prelie": (
            rhd(x, rhd(y, z)) - rhd(rhd(x, y), z),
            rhd(y, rhd(x, z)) - rhd(rhd(y, x), z),
        ),
        "rhd derivation of vee": (rhd(x, vee(y, z)), vee(rhd(x, y), z) + vee(rhd(x, z), y)),
    }
    for name, (lhs, rhs) in identities.items():
        report.checked += 1
        if lhs != rhs:
            report.failures.append(f"{name} fails on ({x}, {y}, {z}): {lhs} != {rhs}")
    return report


def trees_up_to(max_edges: int, atoms: Sequence[str]) -> list[Forest]:
    return [f for n in range(1, max_edges + 1) for f in edge_trees(n, atoms)]


def edge_trees(n: int, atoms: Sequence[str]) -> list[Forest]:
    return [f for f in enumerate_forests(Family.EDGE, n, "edges", atoms=atoms) if len(f.trees) == 1]


def exhaustive_check(max_edges_each: int, atoms: Sequence[str] = ("a", "b")) -> PreLieReport:
    """Every triple of basis trees with at most ``max_edges_each`` edges each."""
    report = PreLieReport()
    pool = trees_up_to(max_edges_each, atoms)
    for x, y, z in product(pool, repeat=3):
        report.merge(compre_lie_check(LinComb.of(x), LinComb.of(y), LinComb.of(z)))
    return report


def random_check(samples: int, max_total_edges: int, atoms: Sequence[str] = ("a", "b"), seed: int = 0) -> PreLieReport:
    """Random basis triples whose edge counts add up to at most ``max_total_edges``."""
    rng = random.Random(seed)
    by_degree = {n: edge_trees(n, atoms) for n in range(1, max_total_edges - 1)}
    sizes = [s for s in product(by_degree, repeat=3) if sum(s) <= max_total_edges]
    report = PreLieReport()
    for _ in range(samples):
        triple = [LinComb.of(rng.choice(by_degree[n])) for n in rng.choice(sizes)]
        report.merge(compre_lie_check(*triple))
    return report


# ---------------------------------------------------------------------------
# generation by single edges


@dataclass
class SpanReport:
    atoms: tuple[str, ...]
    span: dict[int, int] = field(default_factory=dict)
    trees: dict[int, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.span == self.trees


def generation_span(max_edges: int, atoms: Iterable[str] = ("a",)) -> SpanReport:
    """Close the single edges under both products, degree by degree, and compare
    the dimension of the span with the number of trees in each degree."""
    atoms = tuple(atoms)
    report = SpanReport(atoms)
    spans: dict[int, list[LinComb]] = {}
    for n in range(1, max_edges + 1):
        echelon = Echelon()
        if n == 1:
            for a in atoms:
                echelon.add(LinComb.of(single_edge(a)))
        for i in range(1, n):
            for x in spans[i]:
                for y in spans[n - i]:
                    echelon.add(vee(x, y))
                    echelon.add(rhd(x, y))
        spans[n] = list(echelon.rows.values())
        report.span[n] = len(echelon)
        report.trees[n] = len(edge_trees(n, atoms))
    return report
