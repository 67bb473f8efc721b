"""Morphisms from labeled forests to permutations and packed words.

Both ``theta`` and ``phi_wqsym`` read the labels of a forest along every
linear extension that lists a vertex before the vertices below it.  The
injectivity witness ``max_word`` and the heap-ordered forest to permutation
bijection live here too.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .forests import Family, Flat, Forest
from .linear import LinComb
from .words import Word


def upper_first_extensions(flat: Flat) -> Iterator[tuple[int, ...]]:
    """Orderings of the vertices in which every vertex precedes its parent."""
    n = len(flat)
    pending = [len(c) for c in flat.children]
    order: list[int] = []

    def extend() -> Iterator[tuple[int, ...]]:
        if len(order) == n:
            yield tuple(order)
            return
        for v in range(n):
            if pending[v] == 0:
                pending[v] = -1
                order.append(v)
                p = flat.parents[v]
                if p >= 0:
                    pending[p] -= 1
                yield from extend()
                if p >= 0:
                    pending[p] += 1
                order.pop()
                pending[v] = 0

    yield from extend()


def label_words(forest: Forest) -> LinComb:
    """Sum over upper-first extensions of the word of labels, with multiplicity."""
    flat = forest.flat
    out = LinComb()
    for order in upper_first_extensions(flat):
        out.add(Word(flat.labels[v] for v in order))
    return out


def theta(forest: Forest) -> LinComb:
    """The morphism from ordered forests to FQSym."""
    if not forest.family.bijective:
        raise ValueError(f"theta expects an ordered forest, got {forest.family.value}")
    return label_words(forest)


def phi_wqsym(forest: Forest) -> LinComb:
    """The morphism from preordered forests to WQSym* (coefficients count bijections)."""
    if not forest.family.integer_labels:
        raise ValueError(f"phi_wqsym expects a preordered forest, got {forest.family.value}")
    return label_words(forest)


# ---------------------------------------------------------------------------
# the injectivity witness


def tail_lex_less(u: Sequence[int], v: Sequence[int]) -> bool:
    """Compare right-aligned from the last letter; a proper suffix is smaller."""
    for a, b in zip(reversed(u), reversed(v)):
        if a != b:
            return a < b
    return len(u) < len(v)


def _tail_lex_key(w: Sequence[int]) -> tuple:
    # reversed tuples compare like tail-lex: a proper prefix of the reversal is smaller
    return tuple(reversed(w))


def _integer_label(label: int | str) -> int:
    if isinstance(label, int):
        return label
    if label.isdigit():
        return int(label)
    raise ValueError(f"max_word needs integer decorations, got {label!r}")


def max_word(forest: Forest) -> Word:
    """The tail-lex largest label word of an integer-decorated forest.

    Decorations must strictly increase away from the roots.  A tree gives the
    word of its children forest followed by the root; a forest concatenates
    the words of its trees in increasing tail-lex order.
    """
    flat = forest.flat
    labels = [_integer_label(x) for x in flat.labels]
    for v, p in enumerate(flat.parents):
        if p >= 0 and labels[v] <= labels[p]:
            raise ValueError(f"decorations of {forest} must increase away from the roots")

    def of_forest(roots: Sequence[int]) -> tuple[int, ...]:
        words = sorted((of_tree(r) for r in roots), key=_tail_lex_key)
        return tuple(x for w in words for x in w)

    def of_tree(v: int) -> tuple[int, ...]:
        return of_forest(flat.children[v]) + (labels[v],)

    return Word(of_forest(flat.roots))


# ---------------------------------------------------------------------------
# heap-ordered forests and permutations


def heap_ordered_to_permutation(forest: Forest) -> Word:
    """Insert vertices by increasing label: an isolated one is a fixed point,
    one grafted on k is spliced into the cycle of k right after k."""
    if forest.family is not Family.HEAP_ORDERED:
        raise ValueError(f"expected a heap-ordered forest, got {forest.family.value}")
    flat = forest.flat
    n = len(flat)
    parent_label = [0] * (n + 1)
    for v, p in enumerate(flat.parents):
        parent_label[flat.labels[v]] = flat.labels[p] if p >= 0 else 0
    image = [0] * (n + 1)
    for m in range(1, n + 1):
        k = parent_label[m]
        if k:
            image[m] = image[k]
            image[k] = m
        else:
            image[m] = m
    return Word(image[1:])
