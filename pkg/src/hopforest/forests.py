"""Rooted forests of every flavour: parsing, canonical forms, enumeration, cuts.

A tree is a ``Tree(label, children)`` tuple.  The same shape carries every
family: unlabeled forests use the label ``"*"``, decorated forests use atom
strings, (pre)ordered forests use positive integers, and edge-decorated
forests store the decoration of the edge below a vertex as that vertex's label
(roots carry ``"*"``).

A :class:`Forest` is always canonical: labels packed where the family asks for
it, children sorted by ``(label, rendering)`` and trees sorted by rendering,
except for planar forests whose order is kept verbatim.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from itertools import combinations, permutations, product
from typing import Iterable, Iterator, NamedTuple, Sequence

Label = int | str


class Family(str, Enum):
    ROOTED = "rooted"
    PLANAR = "planar"
    ORDERED = "ordered"
    HEAP_ORDERED = "heap_ordered"
    PREORDERED = "preordered"
    HEAP_PREORDERED = "heap_preordered"
    EDGE = "edge_decorated"

    @property
    def integer_labels(self) -> bool:
        return self in _INTEGER_FAMILIES

    @property
    def bijective(self) -> bool:
        return self in (Family.ORDERED, Family.HEAP_ORDERED)

    @property
    def heap(self) -> bool:
        return self in (Family.HEAP_ORDERED, Family.HEAP_PREORDERED)

    @property
    def planar(self) -> bool:
        return self is Family.PLANAR


_INTEGER_FAMILIES = frozenset({Family.ORDERED, Family.HEAP_ORDERED, Family.PREORDERED, Family.HEAP_PREORDERED})


class Tree(NamedTuple):
    label: Label
    children: tuple[Tree, ...] = ()


class Forest:
    """A canonical forest of a given family; equality is equality of renderings."""

    __slots__ = ("trees", "family", "text", "__dict__")

    def __init__(self, trees: tuple[Tree, ...], family: Family, text: str):
        self.trees = trees
        self.family = family
        self.text = text

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Forest) and self.text == other.text and self.family is other.family

    def __hash__(self) -> int:
        return hash(self.text)

    def __lt__(self, other: Forest) -> bool:
        return self.text < other.text

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f"Forest({self.text!r}, {self.family.value})"

    def __len__(self) -> int:
        return len(self.trees)

    def __bool__(self) -> bool:
        return True

    def __mul__(self, other: Forest) -> Forest:
        return graded_product(self, other)

    @cached_property
    def flat(self) -> Flat:
        labels: list[Label] = []
        parents: list[int] = []

        def visit(t: Tree, parent: int) -> None:
            me = len(labels)
            labels.append(t.label)
            parents.append(parent)
            for c in t.children:
                visit(c, me)

        for t in self.trees:
            visit(t, -1)
        return Flat(tuple(labels), tuple(parents))

    @property
    def is_unit(self) -> bool:
        return not self.trees

    @property
    def n_vertices(self) -> int:
        return len(self.flat.labels)

    @property
    def n_edges(self) -> int:
        return self.n_vertices - len(self.trees)

    @property
    def max_label(self) -> int:
        return max((l for l in self.flat.labels if isinstance(l, int)), default=0)

    @property
    def n_isolated(self) -> int:
        return sum(1 for t in self.trees if not t.children)


@dataclass(frozen=True)
class Flat:
    """Preorder vertex list: ``parents[v]`` is -1 for roots; children follow their parent."""

    labels: tuple[Label, ...]
    parents: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.labels)

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        kids: list[list[int]] = [[] for _ in self.labels]
        for v, p in enumerate(self.parents):
            if p >= 0:
                kids[p].append(v)
        return tuple(map(tuple, kids))

    @cached_property
    def ancestors(self) -> tuple[frozenset[int], ...]:
        """Strict ancestors of each vertex."""
        out: list[frozenset[int]] = []
        for v, p in enumerate(self.parents):
            out.append(frozenset() if p < 0 else out[p] | {p})
        return tuple(out)

    @property
    def roots(self) -> list[int]:
        return [v for v, p in enumerate(self.parents) if p < 0]

    def above(self, a: int, b: int) -> bool:
        """a ->> b: b lies on the path from a down to its root (a == b allowed)."""
        return a == b or b in self.ancestors[a]

    def component_root(self, v: int) -> int:
        while self.parents[v] >= 0:
            v = self.parents[v]
        return v


# ---------------------------------------------------------------------------
# rendering and canonical forms


def _label_key(label: Label) -> tuple:
    return (0, label, "") if isinstance(label, int) else (1, 0, label)


def _canon_tree(t: Tree, family: Family) -> tuple[Tree, str]:
    kids = [_canon_tree(c, family) for c in t.children]
    if not family.planar:
        kids.sort(key=lambda kt: (_label_key(kt[0].label), kt[1]))
    if family is Family.EDGE:
        text = "*[" + ",".join(f"{k.label}:{s}" for k, s in kids) + "]"
    else:
        text = f"{t.label}[" + ",".join(s for _, s in kids) + "]"
    return Tree(t.label, tuple(k for k, _ in kids)), text


def _all_labels(trees: Iterable[Tree]) -> Iterator[Label]:
    for t in trees:
        yield t.label
        yield from _all_labels(t.children)


def _relabel(trees: Iterable[Tree], mapping: dict) -> tuple[Tree, ...]:
    return tuple(Tree(mapping[t.label], _relabel(t.children, mapping)) for t in trees)


def pack_mapping(values: Iterable[int]) -> dict[int, int]:
    return {v: i for i, v in enumerate(sorted(set(values)), start=1)}


def _check_heap(trees: Iterable[Tree], family: Family) -> None:
    for t in trees:
        for c in t.children:
            if not c.label > t.label:
                raise ValueError(f"{family.value} forest: label {c.label} sits above label {t.label}; labels must increase strictly away from roots")
        _check_heap(t.children, family)


def canonical(trees: Iterable[Tree], family: Family | str, *, relabel: bool = False) -> Forest:
    """Canonical form of a forest.

    With ``relabel`` the integer labels are packed (standardized for ordered
    families); without it they must already satisfy the family's labeling rule.
    """
    family = Family(family)
    trees = tuple(trees)
    if family.integer_labels:
        labels = list(_all_labels(trees))
        if not all(isinstance(l, int) and l > 0 for l in labels):
            raise ValueError(f"{family.value} forest: labels must be positive integers")
        if relabel:
            trees = _relabel(trees, pack_mapping(labels))
            labels = list(_all_labels(trees))
        if family.bijective and sorted(labels) != list(range(1, len(labels) + 1)):
            raise ValueError(f"{family.value} forest: labels must be a bijection onto 1..{len(labels)}")
        if not family.bijective and set(labels) != set(range(1, max(labels, default=0) + 1)):
            raise ValueError(f"{family.value} forest: labels must be a surjection onto 1..max (packed)")
        if family.heap:
            _check_heap(trees, family)
    elif family is Family.EDGE:
        trees = tuple(Tree("*", t.children) for t in trees)
    canon = [_canon_tree(t, family) for t in trees]
    if not family.planar:
        canon.sort(key=lambda ts: ts[1])
    text = " ".join(s for _, s in canon) or "1"
    return Forest(tuple(t for t, _ in canon), family, text)


def unit(family: Family | str) -> Forest:
    return canonical((), family)


def from_flat(labels: Sequence[Label], parents: Sequence[int], family: Family, keep: Iterable[int] | None = None, *, relabel: bool = True) -> Forest:
    """Induced subforest on ``keep`` (a vertex's parent is kept only if it is in ``keep``)."""
    keep_set = set(range(len(labels))) if keep is None else set(keep)
    order = sorted(keep_set)
    kids: dict[int, list[int]] = {v: [] for v in order}
    roots: list[int] = []
    for v in order:
        p = parents[v]
        (kids[p] if p in keep_set else roots).append(v)

    def build(v: int) -> Tree:
        return Tree(labels[v], tuple(build(c) for c in kids[v]))

    return canonical((build(r) for r in roots), family, relabel=relabel)


# ---------------------------------------------------------------------------
# parsing


_TOKEN = re.compile(r"\s*(?:([A-Za-z0-9_*]+)|(.))")


class _Parser:
    def __init__(self, text: str):
        self.tokens = [m.group(1) or m.group(2) for m in _TOKEN.finditer(text) if (m.group(1) or m.group(2))]
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"parse error at token {self.pos}: expected {expected or 'a label'}, got {tok!r}")
        self.pos += 1
        return tok

    def atom(self) -> str:
        tok = self.take()
        if not re.fullmatch(r"[A-Za-z0-9_*]+", tok):
            raise ValueError(f"parse error: {tok!r} is not a label")
        return tok

    def vertex_tree(self, integer: bool) -> Tree:
        raw = self.atom()
        label: Label = raw
        if integer:
            if not raw.isdigit() or int(raw) == 0:
                raise ValueError(f"parse error: {raw!r} is not a positive integer label")
            label = int(raw)
        self.take("[")
        kids: list[Tree] = []
        if self.peek() != "]":
            kids.append(self.vertex_tree(integer))
            while self.peek() == ",":
                self.take(",")
                kids.append(self.vertex_tree(integer))
        self.take("]")
        return Tree(label, tuple(kids))

    def edge_tree(self, incoming: str = "*") -> Tree:
        self.take("*")
        self.take("[")
        kids: list[Tree] = []
        if self.peek() != "]":
            while True:
                deco = self.atom()
                self.take(":")
                kids.append(self.edge_tree(deco))
                if self.peek() != ",":
                    break
                self.take(",")
        self.take("]")
        return Tree(incoming, tuple(kids))


def parse_trees(text: str, family: Family | str) -> list[Tree]:
    family = Family(family)
    if text.strip() == "1":
        return []
    parser = _Parser(text)
    trees: list[Tree] = []
    while parser.peek() is not None:
        if family is Family.EDGE:
            trees.append(parser.edge_tree())
        else:
            trees.append(parser.vertex_tree(family.integer_labels))
    if not trees:
        raise ValueError("parse error: empty input (write 1 for the empty forest)")
    return trees


def parse(text: str, family: Family | str = Family.ROOTED) -> Forest:
    """Parse a forest in the text grammar and return its canonical form."""
    return canonical(parse_trees(text, family), family)


# ---------------------------------------------------------------------------
# enumeration


def _tree_weight(size: int, grading: str) -> int:
    return size if grading == "vertices" else size - 1


@lru_cache(maxsize=None)
def shape_trees(n_vertices: int, planar: bool) -> tuple[Tree, ...]:
    """Unlabeled trees with the given number of vertices (canonical, deduplicated)."""
    if n_vertices < 1:
        return ()
    out = []
    for f in shape_forests(n_vertices - 1, planar, "vertices", False):
        out.append(Tree("*", f))
    return tuple(out)


@lru_cache(maxsize=None)
def shape_forests(total: int, planar: bool, grading: str, no_isolated: bool) -> tuple[tuple[Tree, ...], ...]:
    """Unlabeled forests of total weight ``total`` (vertices or edges) as tree tuples.

    Rooted forests are multisets: trees are emitted in a fixed nondecreasing
    (size, index) order so that each multiset appears exactly once.
    """
    if grading == "edges" and not no_isolated:
        raise ValueError("edge grading is only finite on forests without isolated vertices")
    min_size = 2 if no_isolated else 1
    catalogue = []
    size = min_size
    while _tree_weight(size, grading) <= total:
        for i, t in enumerate(shape_trees(size, planar)):
            catalogue.append(((size, i), _tree_weight(size, grading), t))
        size += 1

    out: list[tuple[Tree, ...]] = []

    def grow(remaining: int, start: int, acc: tuple[Tree, ...]) -> None:
        if remaining == 0:
            out.append(acc)
            return
        for j in range(0 if planar else start, len(catalogue)):
            _, w, t = catalogue[j]
            if 0 < w <= remaining:
                grow(remaining - w, j, acc + (t,))

    grow(total, 0, ())
    return tuple(out)


@lru_cache(maxsize=None)
def packed_words(n: int) -> tuple[tuple[int, ...], ...]:
    """All surjections {1..n} -> {1..k}, as words, in lexicographic order."""
    out = []
    for w in product(range(1, n + 1), repeat=n):
        if set(w) == set(range(1, max(w, default=0) + 1)):
            out.append(w)
    return tuple(out)


def _twins(flat: Flat) -> dict[int, int]:
    # vertex -> the previous sibling (or root) carrying an identical subtree
    shape: list[str] = [""] * len(flat)
    for v in reversed(range(len(flat))):
        shape[v] = "[" + ",".join(sorted(shape[c] for c in flat.children[v])) + "]"
    twins = {}
    for group in (*flat.children, tuple(flat.roots)):
        for a, b in zip(group, group[1:]):
            if shape[a] == shape[b]:
                twins[b] = a
    return twins


def _heap_labelings(flat: Flat, bijective: bool) -> Iterator[tuple[int, ...]]:
    # hand out the values 1, 2, ... to sets of vertices whose parents already have a value;
    # identical siblings take nondecreasing values, which only skips relabelings of one forest
    n = len(flat)
    labels = [0] * n
    twins = _twins(flat)

    def grow(value: int, done: int) -> Iterator[tuple[int, ...]]:
        if done == n:
            yield tuple(labels)
            return
        free = [v for v in range(n) if not labels[v] and (flat.parents[v] < 0 or 0 < labels[flat.parents[v]] < value)]
        ready = [v for v in free if v not in twins or labels[twins[v]] or (not bijective and twins[v] in free)]
        for size in (1,) if bijective else range(1, len(ready) + 1):
            for block in combinations(ready, size):
                if any(v in twins and not labels[twins[v]] and twins[v] not in block for v in block):
                    continue
                for v in block:
                    labels[v] = value
                yield from grow(value + 1, done + size)
                for v in block:
                    labels[v] = 0

    yield from grow(1, 0)


def _labelings(family: Family, flat: Flat, atoms: Sequence[str]) -> Iterator[tuple[Label, ...]]:
    n = len(flat)
    if family.heap:
        yield from _heap_labelings(flat, family.bijective)
        return
    if family.bijective:
        pool: Iterable[tuple[int, ...]] = permutations(range(1, n + 1))
    elif family.integer_labels:
        pool = packed_words(n)
    elif family is Family.EDGE:
        roots = set(flat.roots)
        for deco in product(atoms, repeat=n - len(roots)):
            it = iter(deco)
            yield tuple("*" if v in roots else next(it) for v in range(n))
        return
    else:
        yield from product(atoms, repeat=n)
        return
    yield from pool


def enumerate_forests(
    family: Family | str,
    n: int,
    grading: str = "vertices",
    quotient: bool = False,
    atoms: Sequence[str] = ("*",),
) -> list[Forest]:
    """Every basis forest of the family in degree ``n``, sorted canonically.

    ``quotient`` drops forests with isolated vertices (the contraction
    quotients); edge grading requires it.  ``atoms`` decorates rooted, planar
    and edge-decorated forests.
    """
    family = Family(family)
    if grading not in ("vertices", "edges"):
        raise ValueError(f"unknown grading {grading!r}: use vertices or edges")
    if n < 0:
        return []
    atoms = tuple(atoms)
    if family is Family.EDGE and grading == "vertices":
        raise ValueError("edge-decorated forests are graded by edges")
    no_isolated = quotient or family is Family.EDGE
    seen: set[Forest] = set()
    for shape in shape_forests(n, family.planar, grading, no_isolated):
        base = canonical(shape, Family.PLANAR)
        flat = base.flat
        for labels in _labelings(family, flat, atoms):
            seen.add(from_flat(labels, flat.parents, family, relabel=False))
    return sorted(seen)


# ---------------------------------------------------------------------------
# admissible cuts


def admissible_cuts(forest: Forest) -> list[frozenset[int]]:
    """All antichains of vertices (vertex ids are preorder positions)."""
    flat = forest.flat
    n = len(flat)
    anc_masks = [sum(1 << a for a in flat.ancestors[v]) for v in range(n)]
    cuts = []
    for mask in range(1 << n):
        if all(not (anc_masks[v] & mask) for v in range(n) if mask >> v & 1):
            cuts.append(frozenset(v for v in range(n) if mask >> v & 1))
    return cuts


def is_admissible(forest: Forest, cut: Iterable[int]) -> bool:
    flat = forest.flat
    cut = set(cut)
    return all(v in range(len(flat)) and not (flat.ancestors[v] & cut) for v in cut)


def split_cut(forest: Forest, cut: Iterable[int]) -> tuple[Forest, Forest]:
    """(Lea, Roo): the part above the cut and the rest, both canonical."""
    cut = frozenset(cut)
    if not is_admissible(forest, cut):
        raise ValueError(f"{sorted(cut)} is not an admissible cut of {forest}")
    flat = forest.flat
    upper = {v for v in range(len(flat)) if v in cut or flat.ancestors[v] & cut}
    lower = set(range(len(flat))) - upper
    return (
        from_flat(flat.labels, flat.parents, forest.family, upper),
        from_flat(flat.labels, flat.parents, forest.family, lower),
    )


# ---------------------------------------------------------------------------
# products and the planar / ordered maps


def _shift(trees: Iterable[Tree], by: int) -> tuple[Tree, ...]:
    return tuple(Tree(t.label + by, _shift(t.children, by)) for t in trees)


def graded_product(f: Forest, g: Forest) -> Forest:
    """Concatenation; ordered labels of g shift by |f|_v, preordered ones by max(f)."""
    if f.family is not g.family:
        raise ValueError(f"cannot multiply a {f.family.value} forest by a {g.family.value} forest")
    family = f.family
    if family.bijective:
        right = _shift(g.trees, f.n_vertices)
    elif family.integer_labels:
        right = _shift(g.trees, f.max_label)
    else:
        right = g.trees
    return canonical(f.trees + right, family)


def planar_to_ordered(f: Forest) -> Forest:
    """Number the vertices depth first (root before subtrees, left to right)."""
    if not f.family.planar:
        raise ValueError("planar_to_ordered expects a planar forest")
    flat = f.flat
    return from_flat(range(1, len(flat) + 1), flat.parents, Family.HEAP_ORDERED, relabel=False)


def ordered_to_planar(f: Forest) -> Forest:
    """Order roots and siblings by increasing label, then forget the labels."""
    if not f.family.bijective:
        raise ValueError("ordered_to_planar expects an ordered forest")

    def strip(t: Tree) -> Tree:
        return Tree("*", tuple(strip(c) for c in sorted(t.children, key=lambda c: c.label)))

    return canonical((strip(t) for t in sorted(f.trees, key=lambda t: t.label)), Family.PLANAR)


def as_family(f: Forest, family: Family | str) -> Forest:
    """Reinterpret a forest in another family with compatible labels (validated)."""
    return canonical(f.trees, family)
