"""Hopf morphisms from decorated forests to (quasi-)shuffle algebras.

A morphism is fixed by a seed: a linear map from trees to single letters.
It is built twice.  ``UniversalMorphism.lift`` solves for it degree by degree
from the coproduct, while the ``phi_*`` functions evaluate closed sums over
linear (pre)orders and generalized (contracted) partitions.  The tests demand
that both agree.

Sources are ``h`` (vertex-decorated forests, cut coproduct) and ``c``
(edge-decorated forests, contraction coproduct); targets are ``sh`` (shuffle)
and ``csh`` (quasi-shuffle with a bracket on letters).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .contraction import cont, delta_contraction, edges, quotient_normal_form
from .cuts import delta_cut
from .forests import Family, Flat, Forest, canonical, from_flat, parse
from .linear import LinComb, Tensor
from .morphisms import upper_first_extensions
from .words import Bracket, DWord, Letter, deconcatenation, quasi_shuffle_product, shuffle_product, union_bracket

SOURCES = {"h": Family.ROOTED, "c": Family.EDGE}
TARGETS = ("sh", "csh")


def zero_bracket(a: Letter, b: Letter) -> None:
    """The bracket that kills every merge: the quasi-shuffle becomes the shuffle."""
    return None


# ---------------------------------------------------------------------------
# seeds


@dataclass
class Seed:
    """A finite table from trees to sums of one-letter words; zero elsewhere."""

    table: dict[Forest, LinComb] = field(default_factory=dict)
    rule: Callable[[Forest], LinComb] | None = None
    name: str = "table"

    def __call__(self, tree: Forest) -> LinComb:
        if tree in self.table:
            return self.table[tree]
        return self.rule(tree) if self.rule else LinComb()


def _is_smallest(tree: Forest) -> bool:
    return tree.n_vertices == 1 if tree.family is Family.ROOTED else tree.n_edges == 1


def _only_label(tree: Forest) -> str:
    # the decoration of a one-vertex tree or of a single edge
    t = tree.trees[0]
    return t.label if tree.family is Family.ROOTED else t.children[0].label


def arborification() -> Seed:
    """A single vertex (or single edge) goes to its decoration, everything else to zero."""
    return Seed(rule=lambda t: LinComb.of(DWord([_only_label(t)])) if _is_smallest(t) else LinComb(), name="arborification")


def generic_atom(tree: Forest) -> str:
    return "{" + str(tree) + "}"


def generic() -> Seed:
    """Every tree goes to its own fresh letter, so no two seed values interact."""
    return Seed(rule=lambda t: LinComb.of(DWord([generic_atom(t)])), name="generic")


def parse_seed(text: str, source: str) -> Seed:
    """Lines ``tree => atom`` (``0`` allowed); blank lines and ``#`` comments are skipped."""
    family = SOURCES[source]
    table: dict[Forest, LinComb] = {}
    for n, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=>" not in line:
            raise ValueError(f"seed line {n}: expected 'tree => atom', got {line!r}")
        lhs, rhs = (s.strip() for s in line.split("=>", 1))
        tree = parse(lhs, family)
        if len(tree.trees) != 1 or (family is Family.EDGE and tree.n_edges == 0):
            raise ValueError(f"seed line {n}: {lhs!r} is not a nonempty tree")
        if rhs == "0":
            table[tree] = LinComb()
        elif rhs.replace("_", "").isalnum():
            table[tree] = LinComb.of(DWord([rhs]))
        else:
            raise ValueError(f"seed line {n}: {rhs!r} is not an atom")
    return Seed(table, name="file")


# ---------------------------------------------------------------------------
# word arithmetic


def concat(x: Mapping, y: Mapping) -> LinComb:
    out = LinComb()
    for u, c in x.items():
        for v, d in y.items():
            out.add(DWord(u + v), c * d)
    return out


def concat_all(factors: Iterable[Mapping]) -> LinComb:
    out = LinComb.of(DWord())
    for f in factors:
        out = concat(out, f)
    return out


def bracket_all(factors: Sequence[Mapping], bracket: Bracket) -> LinComb:
    """Multilinear bracket of sums of one-letter words."""
    acc = LinComb(factors[0])
    for f in factors[1:]:
        nxt = LinComb()
        for u, c in acc.items():
            for v, d in f.items():
                merged = bracket(u[0], v[0])
                if merged is not None:
                    nxt.add(DWord([merged]), c * d)
        acc = nxt
    return acc


def reduced_deconcatenation(w: DWord) -> LinComb:
    return LinComb((t, c) for t, c in deconcatenation(w).items() if t[0] and t[1])


# ---------------------------------------------------------------------------
# the inductive lift


class UniversalMorphism:
    """The unique Hopf morphism with prescribed tree-to-letter projection."""

    def __init__(self, source: str, target: str, seed: Seed, bracket: Bracket = union_bracket):
        if source not in SOURCES:
            raise ValueError(f"unknown source {source!r}: choose from {sorted(SOURCES)}")
        if target not in TARGETS:
            raise ValueError(f"unknown target {target!r}: choose from {list(TARGETS)}")
        self.source, self.target, self.seed, self.bracket = source, target, seed, bracket
        self.family = SOURCES[source]
        self._memo: dict[Forest, LinComb] = {}

    def product(self, x: Mapping, y: Mapping) -> LinComb:
        out = LinComb()
        for u, c in x.items():
            for v, d in y.items():
                p = shuffle_product(u, v) if self.target == "sh" else quasi_shuffle_product(u, v, self.bracket)
                out.add_scaled(p, c * d)
        return out

    def source_reduced_coproduct(self, forest: Forest) -> LinComb:
        delta = delta_cut(forest) if self.source == "h" else delta_contraction(forest)
        return LinComb((t, c) for t, c in delta.items() if not (t[0].is_unit or t[1].is_unit))

    def __call__(self, x: Forest | Mapping) -> LinComb:
        if isinstance(x, Forest):
            return self.lift(x)
        return LinComb(x).map(self.lift)

    def lift(self, forest: Forest) -> LinComb:
        if forest.family is not self.family:
            raise ValueError(f"expected a {self.family.value} forest, got {forest}")
        if forest not in self._memo:
            self._memo[forest] = self._compute(forest)
        return self._memo[forest]

    def _compute(self, forest: Forest) -> LinComb:
        if forest.is_unit:
            return LinComb.of(DWord())
        if len(forest.trees) > 1:
            out = LinComb.of(DWord())
            for t in forest.trees:
                out = self.product(out, self.lift(canonical((t,), self.family)))
            return out
        image = LinComb()
        for (left, right), c in self.source_reduced_coproduct(forest).items():
            for u, a in self.lift(left).items():
                for v, b in self.lift(right).items():
                    image.add(Tensor((u, v)), c * a * b)
        # read a preimage under the reduced deconcatenation off the first-letter splits
        w = LinComb()
        for (u, v), c in image.items():
            if len(u) == 1:
                w.add(DWord(u + v), c)
        if w.map(reduced_deconcatenation) != image:
            raise ArithmeticError(f"the image of the reduced coproduct of {forest} is not a reduced deconcatenation")
        return w + self.seed(forest)


# ---------------------------------------------------------------------------
# linear orders and preorders (upper vertices get larger values)


def linear_orders(flat: Flat) -> Iterator[tuple[int, ...]]:
    """Vertex sequences from the largest value down, each vertex before its parent."""
    return upper_first_extensions(flat)


def linear_preorders(flat: Flat) -> Iterator[tuple[frozenset[int], ...]]:
    """Ordered set partitions, largest value first, in which a vertex's block
    comes strictly before its parent's block."""
    n = len(flat)
    pending = [len(c) for c in flat.children]
    placed = [False] * n
    blocks: list[frozenset[int]] = []

    def extend() -> Iterator[tuple[frozenset[int], ...]]:
        if all(placed):
            yield tuple(blocks)
            return
        ready = [v for v in range(n) if not placed[v] and pending[v] == 0]
        for r in range(1, len(ready) + 1):
            for block in combinations(ready, r):
                for v in block:
                    placed[v] = True
                    if flat.parents[v] >= 0:
                        pending[flat.parents[v]] -= 1
                blocks.append(frozenset(block))
                yield from extend()
                blocks.pop()
                for v in block:
                    placed[v] = False
                    if flat.parents[v] >= 0:
                        pending[flat.parents[v]] += 1

    yield from extend()


def _contracted(forest: Forest, e: frozenset[int]) -> tuple[Flat, list[Forest]]:
    """The forest with every edge of ``e`` contracted, and the component under each
    contracted vertex (vertex-decorated case, nothing quotiented)."""
    flat = forest.flat
    comp: list[int] = []
    for v, p in enumerate(flat.parents):
        comp.append(comp[p] if v in e else v)
    tops = [v for v in range(len(flat)) if v not in e]
    index = {v: i for i, v in enumerate(tops)}
    parents = tuple(index[comp[flat.parents[v]]] if flat.parents[v] >= 0 else -1 for v in tops)
    components = [from_flat(flat.labels, flat.parents, forest.family, [w for w in range(len(flat)) if comp[w] == v]) for v in tops]
    return Flat(tuple(range(len(tops))), parents), components


def _edge_subsets(forest: Forest) -> Iterator[frozenset[int]]:
    es = edges(forest)
    for r in range(len(es) + 1):
        for c in combinations(es, r):
            yield frozenset(c)


def phi_hck_to_sh(forest: Forest, seed: Seed) -> LinComb:
    """Sum over edge subsets and linear orders of the contraction, reading the
    seeds of the collapsed components from the top down."""
    out = LinComb()
    for e in _edge_subsets(forest):
        flat, comps = _contracted(forest, e)
        letters = [seed(c) for c in comps]
        for order in linear_orders(flat):
            out.add_scaled(concat_all(letters[v] for v in order))
    return out


def phi_hck_to_csh(forest: Forest, seed: Seed, bracket: Bracket = union_bracket) -> LinComb:
    """As above over linear preorders; components sharing a value are bracketed."""
    out = LinComb()
    for e in _edge_subsets(forest):
        flat, comps = _contracted(forest, e)
        letters = [seed(c) for c in comps]
        for blocks in linear_preorders(flat):
            out.add_scaled(concat_all(bracket_all([letters[v] for v in sorted(b)], bracket) for b in blocks))
    return out


# ---------------------------------------------------------------------------
# generalized (contracted) partitions of edge-decorated forests


def _edge_graph(forest: Forest) -> tuple[dict[int, tuple[int, int]], list[int]]:
    # edge (named by its top vertex) -> its two endpoints; and the component of each vertex
    flat = forest.flat
    ends = {v: (v, p) for v, p in enumerate(flat.parents) if p >= 0}
    return ends, [flat.component_root(v) for v in range(len(flat))]


def _path_edges(flat: Flat, v: int, w: int) -> set[int]:
    """Edges on the path between two vertices of one tree."""
    up_v = [v, *sorted(flat.ancestors[v], key=lambda a: -len(flat.ancestors[a]))]
    up_w = [w, *sorted(flat.ancestors[w], key=lambda a: -len(flat.ancestors[a]))]
    meet = next(a for a in up_v if a in set(up_w))
    return set(up_v[: up_v.index(meet)]) | set(up_w[: up_w.index(meet)])


def _block_vertices(block: Iterable[int], ends: Mapping[int, tuple[int, int]]) -> set[int]:
    return {x for e in block for x in ends[e]}


def is_generalized_partition(forest: Forest, blocks: Sequence[frozenset[int]]) -> bool:
    flat = forest.flat
    ends, comp = _edge_graph(forest)
    all_edges = set(ends)
    if any(not b for b in blocks) or sum(len(b) for b in blocks) != len(all_edges) or set().union(*blocks) != all_edges:
        return False
    position = {e: i for i, b in enumerate(blocks) for e in b}
    for i, b in enumerate(blocks):
        if len({comp[x] for e in b for x in ends[e]}) != 1:
            return False
        for v, w in combinations(sorted(_block_vertices(b, ends)), 2):
            if any(position[x] > i for x in _path_edges(flat, v, w)):
                return False
    return True


def generalized_partitions(forest: Forest) -> list[tuple[frozenset[int], ...]]:
    """Every ordered partition of the edges passing the block and path conditions."""
    es = edges(forest)
    out = []

    def grow(remaining: frozenset[int], acc: list[frozenset[int]]) -> None:
        if not remaining:
            if is_generalized_partition(forest, acc):
                out.append(tuple(acc))
            return
        items = sorted(remaining)
        for r in range(1, len(items) + 1):
            for block in combinations(items, r):
                acc.append(frozenset(block))
                grow(remaining - acc[-1], acc)
                acc.pop()

    if es:
        grow(frozenset(es), [])
    return out


def is_contracted_grouping(forest: Forest, groups: Sequence[Sequence[frozenset[int]]]) -> bool:
    """The extra condition on a grouping of a generalized partition.

    Blocks in one group must be vertex-disjoint, and two of them in the same
    tree must stay apart once the earlier groups are contracted: the path
    between them has to use an edge of a later group.
    """
    flat = forest.flat
    ends, comp = _edge_graph(forest)
    group_of = {e: i for i, g in enumerate(groups) for b in g for e in b}
    for i, g in enumerate(groups):
        for b1, b2 in combinations(g, 2):
            v1, v2 = _block_vertices(b1, ends), _block_vertices(b2, ends)
            if v1 & v2:
                return False
            v, w = min(v1), min(v2)
            if comp[v] == comp[w]:
                # the path between two subtrees, minus their own edges, joins their closest vertices
                between = _path_edges(flat, v, w) - b1 - b2
                if not any(group_of[x] > i for x in between):
                    return False
    return True


def _compositions(k: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    for first in range(1, k + 1):
        for rest in _compositions(k - first):
            yield (first,) + rest


def generalized_contracted_partitions(forest: Forest) -> list[tuple[frozenset[frozenset[int]], ...]]:
    """Consecutive groupings of generalized partitions passing the extra condition;
    the order inside a group is forgotten."""
    seen: dict[tuple, None] = {}
    for blocks in generalized_partitions(forest):
        for sizes in _compositions(len(blocks)):
            groups, i = [], 0
            for s in sizes:
                groups.append(blocks[i : i + s])
                i += s
            if is_contracted_grouping(forest, groups):
                seen.setdefault(tuple(frozenset(g) for g in groups), None)
    return list(seen)


def block_tree(forest: Forest, block: Iterable[int]) -> Forest:
    """Contract every edge outside ``block``; what survives is one tree."""
    rest = set(edges(forest)) - set(block)
    return quotient_normal_form(cont(forest, rest))


def phi_cck_to_sh(forest: Forest, seed: Seed) -> LinComb:
    out = LinComb()
    if forest.is_unit:
        return LinComb.of(DWord())
    for blocks in generalized_partitions(forest):
        out.add_scaled(concat_all(seed(block_tree(forest, b)) for b in blocks))
    return out


def phi_cck_to_csh(forest: Forest, seed: Seed, bracket: Bracket = union_bracket) -> LinComb:
    out = LinComb()
    if forest.is_unit:
        return LinComb.of(DWord())
    for groups in generalized_contracted_partitions(forest):
        letters = []
        for g in groups:
            letters.append(bracket_all([seed(block_tree(forest, b)) for b in sorted(g, key=sorted)], bracket))
        out.add_scaled(concat_all(letters))
    return out


def closed_formula(source: str, target: str, forest: Forest, seed: Seed, bracket: Bracket = union_bracket) -> LinComb:
    if source == "h":
        if forest.is_unit:
            return LinComb.of(DWord())
        return phi_hck_to_sh(forest, seed) if target == "sh" else phi_hck_to_csh(forest, seed, bracket)
    return phi_cck_to_sh(forest, seed) if target == "sh" else phi_cck_to_csh(forest, seed, bracket)


def seed_domain(forest: Forest, source: str) -> list[Forest]:
    """The trees whose seed values can enter the image of ``forest``."""
    found: set[Forest] = set()
    if source == "h":
        for e in _edge_subsets(forest):
            found.update(_contracted(forest, e)[1])
    else:
        for blocks in generalized_partitions(forest):
            found.update(block_tree(forest, b) for b in blocks)
    return sorted(found)


def all_seed_tables(domain: Sequence[Forest], values: Sequence[str | None]) -> Iterator[Seed]:
    """Every seed on ``domain`` with values among single atoms and ``None`` (zero)."""
    for choice in product(values, repeat=len(domain)):
        yield Seed({t: (LinComb.of(DWord([v])) if v else LinComb()) for t, v in zip(domain, choice)})

