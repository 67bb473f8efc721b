"""Permutations, packed words, decorated words and the word Hopf algebras.

Three basis types live here:

* :class:`Word` -- a word of positive integers (a permutation or a packed word);
* :class:`DWord` -- a word whose letters are nonempty multisets of atoms; a
  singleton multiset is just the atom, larger ones are bracket letters;
* :class:`DecoratedWord` -- a word of ``(value, atom)`` pairs, i.e. a
  permutation or packed word with one decoration per position.

The bracket of the quasi-shuffle algebra defaults to multiset union, the free
commutative semigroup on the atoms.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations, product
from typing import Callable, Iterable, Sequence

from .forests import packed_words
from .linear import GradedBialgebra, LinComb, Tensor

Letter = tuple[str, ...]
Bracket = Callable[[Letter, Letter], Letter]


class Word(tuple):
    """Integer word rendered ``(a1 a2 ... an)``; the empty word renders ``1``."""

    __slots__ = ()

    def __str__(self) -> str:
        return "(" + " ".join(map(str, self)) + ")" if self else "1"

    def __repr__(self) -> str:
        return f"Word{tuple(self)!r}"

    @property
    def max(self) -> int:
        return max(self, default=0)


class DWord(tuple):
    """Word over bracket-closed letters (sorted atom tuples)."""

    __slots__ = ()

    def __new__(cls, letters: Iterable = ()):
        return super().__new__(cls, (letter_of(x) for x in letters))

    def __str__(self) -> str:
        return "(" + " ".join(map(render_letter, self)) + ")" if self else "1"

    def __repr__(self) -> str:
        return f"DWord({str(self)!r})"


class DecoratedWord(tuple):
    """Word of ``(value, atom)`` pairs rendered ``(values | decorations)``."""

    __slots__ = ()

    @property
    def values(self) -> Word:
        return Word(v for v, _ in self)

    @property
    def decorations(self) -> tuple[str, ...]:
        return tuple(d for _, d in self)

    def __str__(self) -> str:
        if not self:
            return "1"
        return "(" + " ".join(str(v) for v, _ in self) + " | " + " ".join(d for _, d in self) + ")"

    def __repr__(self) -> str:
        return f"DecoratedWord({str(self)!r})"


def letter_of(x: str | Iterable[str]) -> Letter:
    if isinstance(x, str):
        return (x,)
    letter = tuple(sorted(x))
    if not letter:
        raise ValueError("letters are nonempty multisets of atoms")
    return letter


def render_letter(letter: Letter) -> str:
    return letter[0] if len(letter) == 1 else "[" + " ".join(letter) + "]"


def union_bracket(a: Letter, b: Letter) -> Letter:
    return tuple(sorted(a + b))


def table_bracket(table: dict[tuple[str, str], str]) -> Bracket:
    """A bracket given on atoms by a finite commutative table, extended associatively."""

    def bracket(a: Letter, b: Letter) -> Letter:
        acc = None
        for atom in a + b:
            acc = atom if acc is None else table.get((acc, atom), table.get((atom, acc)))
            if acc is None:
                raise ValueError(f"bracket table has no entry for {a} and {b}")
        return (acc,)

    return bracket


# ---------------------------------------------------------------------------
# packing, standardization, shuffles


def pack(w: Sequence[int]) -> Word:
    rank = {v: i for i, v in enumerate(sorted(set(w)), start=1)}
    return Word(rank[v] for v in w)


def standardize(w: Sequence[int]) -> Word:
    if len(set(w)) != len(w):
        raise ValueError(f"standardize needs distinct letters, got {tuple(w)}")
    return pack(w)


def is_packed(w: Sequence[int]) -> bool:
    return set(w) == set(range(1, max(w, default=0) + 1))


@lru_cache(maxsize=None)
def shuffles(k: int, l: int) -> tuple[Word, ...]:
    """Sh(k,l): permutations increasing on 1..k and on k+1..k+l (as words)."""
    out = []
    n = k + l
    for first in combinations(range(1, n + 1), k):
        rest = [p for p in range(1, n + 1) if p not in first]
        out.append(Word(first + tuple(rest)))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def quasi_shuffles(k: int, l: int) -> tuple[Word, ...]:
    """All (k,l)-quasi-shuffles: surjections strictly increasing on both blocks."""
    out = []
    for m in range(max(k, l), k + l + 1):
        for first in combinations(range(1, m + 1), k):
            missing = [v for v in range(1, m + 1) if v not in first]
            # the second block must contain every value the first block misses
            extra = l - len(missing)
            if extra < 0:
                continue
            for shared in combinations(first, extra):
                second = tuple(sorted(missing + list(shared)))
                out.append(Word(first + second))
    return tuple(sorted(out))


def sjshuffles(k: int, l: int) -> tuple[Word, ...]:
    """SjSh(k,l): the surjective shuffles, i.e. quasi-shuffles of any type."""
    return quasi_shuffles(k, l)


def quasi_shuffle_type(zeta: Sequence[int], k: int, l: int) -> int:
    return k + l - max(zeta, default=0)


def _inverse_fibers(zeta: Sequence[int]) -> list[list[int]]:
    fibers: list[list[int]] = [[] for _ in range(max(zeta, default=0))]
    for i, z in enumerate(zeta):
        fibers[z - 1].append(i)
    return fibers


def shuffle_words(a: Sequence, b: Sequence) -> list[tuple]:
    """All interleavings of a and b (with multiplicity)."""
    out = []
    for zeta in shuffles(len(a), len(b)):
        w = [None] * (len(a) + len(b))
        for i, x in enumerate(list(a) + list(b)):
            w[zeta[i] - 1] = x
        out.append(tuple(w))
    return out


def quasi_shuffle_words(a: Sequence, b: Sequence, merge: Callable) -> list[tuple]:
    out = []
    letters = list(a) + list(b)
    for zeta in quasi_shuffles(len(a), len(b)):
        word = []
        for fiber in _inverse_fibers(zeta):
            if len(fiber) == 1:
                word.append(letters[fiber[0]])
            else:
                merged = merge(letters[fiber[0]], letters[fiber[1]])
                if merged is None:
                    break
                word.append(merged)
        else:
            out.append(tuple(word))
    return out


# ---------------------------------------------------------------------------
# products


def fqsym_product(s: Word, t: Word) -> LinComb:
    k = len(s)
    return LinComb((Word(w), 1) for w in shuffle_words(s, [x + k for x in t]))


def wqsym_star_product(s: Word, t: Word) -> LinComb:
    m = max(s, default=0)
    return LinComb((Word(w), 1) for w in shuffle_words(s, [x + m for x in t]))


def wqsym_product(s: Word, t: Word) -> LinComb:
    """Sum of all packed words whose first |s| letters pack to s and the rest to t."""
    a, b = max(s, default=0), max(t, default=0)
    out = LinComb()
    for zeta in quasi_shuffles(a, b):
        out.add(Word([zeta[x - 1] for x in s] + [zeta[a + x - 1] for x in t]))
    return out


def shuffle_product(u: DWord, v: DWord) -> LinComb:
    return LinComb((DWord(w), 1) for w in shuffle_words(u, v))


def quasi_shuffle_product(u: DWord, v: DWord, bracket: Bracket = union_bracket) -> LinComb:
    return LinComb((DWord(w), 1) for w in quasi_shuffle_words(u, v, bracket))


def fqsym_d_product(s: DecoratedWord, t: DecoratedWord) -> LinComb:
    k = len(s)
    shifted = [(v + k, d) for v, d in t]
    return LinComb((DecoratedWord(w), 1) for w in shuffle_words(s, shifted))


def wqsym_d_product(s: DecoratedWord, t: DecoratedWord) -> LinComb:
    a, b = s.values.max, t.values.max
    out = LinComb()
    for zeta in quasi_shuffles(a, b):
        left = [(zeta[v - 1], d) for v, d in s]
        right = [(zeta[a + v - 1], d) for v, d in t]
        out.add(DecoratedWord(left + right))
    return out


# ---------------------------------------------------------------------------
# coproducts


def fqsym_coproduct(s: Word) -> LinComb:
    return LinComb((Tensor((standardize(s[:k]), standardize(s[k:]))), 1) for k in range(len(s) + 1))


def wqsym_star_coproduct(s: Word) -> LinComb:
    return LinComb((Tensor((pack(s[:k]), pack(s[k:]))), 1) for k in range(len(s) + 1))


def wqsym_coproduct(s: Word) -> LinComb:
    out = LinComb()
    for k in range(s.max + 1):
        low = Word(x for x in s if x <= k)
        high = Word(x - k for x in s if x > k)
        out.add(Tensor((low, high)))
    return out


def deconcatenation(u: DWord) -> LinComb:
    return LinComb((Tensor((DWord(u[:k]), DWord(u[k:]))), 1) for k in range(len(u) + 1))


def fqsym_d_coproduct(s: DecoratedWord) -> LinComb:
    def std(part: Sequence[tuple[int, str]]) -> DecoratedWord:
        return DecoratedWord(zip(standardize([v for v, _ in part]), (d for _, d in part)))

    return LinComb((Tensor((std(s[:k]), std(s[k:]))), 1) for k in range(len(s) + 1))


def wqsym_d_coproduct(s: DecoratedWord) -> LinComb:
    out = LinComb()
    for k in range(s.values.max + 1):
        low = DecoratedWord((v, d) for v, d in s if v <= k)
        high = DecoratedWord((v - k, d) for v, d in s if v > k)
        out.add(Tensor((low, high)))
    return out


# ---------------------------------------------------------------------------
# the projection from decorated surjections to quasi-shuffle words


def wqsym_d_to_csh_d(x: DecoratedWord) -> DWord:
    """Letter j collects the decorations sitting over the fiber of j."""
    fibers: dict[int, list[str]] = {}
    for v, d in x:
        fibers.setdefault(v, []).append(d)
    return DWord(letter_of(fibers[j]) for j in range(1, x.values.max + 1))


def fqsym_d_to_sh_d(x: DecoratedWord) -> DWord:
    return DWord(d for _, d in x)


# ---------------------------------------------------------------------------
# algebra registrations


def _by_length(n: int, pool: Callable[[int], Iterable]) -> list:
    return sorted(pool(n), key=str)


def fqsym() -> GradedBialgebra:
    return GradedBialgebra(
        "FQSym", Word(), len, fqsym_product, fqsym_coproduct,
        lambda n: [Word(p) for p in permutations(range(1, n + 1))],
    )


def wqsym_star() -> GradedBialgebra:
    return GradedBialgebra(
        "WQSym*", Word(), len, wqsym_star_product, wqsym_star_coproduct,
        lambda n: [Word(w) for w in packed_words(n)],
    )


def wqsym() -> GradedBialgebra:
    return GradedBialgebra(
        "WQSym", Word(), len, wqsym_product, wqsym_coproduct,
        lambda n: [Word(w) for w in packed_words(n)],
    )


def default_letters(atoms: Sequence[str], max_bracket: int = 1) -> list[Letter]:
    letters = []
    for size in range(1, max_bracket + 1):
        letters.extend(tuple(c) for c in _multisets(sorted(atoms), size))
    return letters


def _multisets(atoms: Sequence[str], size: int) -> Iterable[tuple[str, ...]]:
    return combinations_with_replacement(atoms, size)


def shuffle_algebra(atoms: Sequence[str] = ("a", "b"), letters: Sequence[Letter] | None = None) -> GradedBialgebra:
    alphabet = list(letters) if letters is not None else default_letters(atoms)
    return GradedBialgebra(
        "Sh^D", DWord(), len, shuffle_product, deconcatenation,
        lambda n: [DWord(w) for w in product(alphabet, repeat=n)],
    )


def weight(u: DWord) -> int:
    """Number of atoms in a word; the union bracket preserves it."""
    return sum(len(letter) for letter in u)


def _weighted_words(atoms: Sequence[str], n: int) -> list[DWord]:
    if n == 0:
        return [DWord()]
    out = []
    for first in range(1, n + 1):
        for letter in _multisets(sorted(atoms), first):
            out.extend(DWord((letter, *rest)) for rest in _weighted_words(atoms, n - first))
    return out


def quasi_shuffle_algebra(atoms: Sequence[str] = ("a", "b"), bracket: Bracket = union_bracket) -> GradedBialgebra:
    """The quasi-shuffle algebra on multiset letters, graded by weight.

    With a bracket other than multiset union the grading is only a filtration,
    so use such brackets through :func:`quasi_shuffle_product` directly.
    """
    return GradedBialgebra(
        "Csh^D", DWord(), weight, lambda u, v: quasi_shuffle_product(u, v, bracket), deconcatenation,
        lambda n: _weighted_words(atoms, n),
    )


def fqsym_d(atoms: Sequence[str] = ("x", "y")) -> GradedBialgebra:
    def basis(n: int) -> list[DecoratedWord]:
        return [DecoratedWord(zip(p, d)) for p in permutations(range(1, n + 1)) for d in product(atoms, repeat=n)]

    return GradedBialgebra("FQSym^D", DecoratedWord(), len, fqsym_d_product, fqsym_d_coproduct, basis)


def wqsym_d(atoms: Sequence[str] = ("x", "y")) -> GradedBialgebra:
    def basis(n: int) -> list[DecoratedWord]:
        return [DecoratedWord(zip(p, d)) for p in packed_words(n) for d in product(atoms, repeat=n)]

    return GradedBialgebra("WQSym^D", DecoratedWord(), len, wqsym_d_product, wqsym_d_coproduct, basis)


# ---------------------------------------------------------------------------
# parsing


def _strip_parens(text: str) -> str:
    text = text.strip()
    if text == "1":
        return ""
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"parse error: words are written in parentheses, got {text!r}")
    return text[1:-1].strip()


def parse_word(text: str) -> Word:
    """``(4 1 3 2 5)``; a single run of digits such as ``(41325)`` is read letter by letter."""
    body = _strip_parens(text)
    tokens = body.split()
    if len(tokens) == 1 and len(tokens[0]) > 1:
        tokens = list(tokens[0])
    if not all(t.isdigit() and int(t) > 0 for t in tokens):
        raise ValueError(f"parse error: {text!r} is not a word of positive integers")
    return Word(int(t) for t in tokens)


def parse_dword(text: str) -> DWord:
    """``(a [x y] b)``."""
    body = _strip_parens(text)
    letters: list[Letter] = []
    i = 0
    tokens = body.replace("[", " [ ").replace("]", " ] ").split()
    while i < len(tokens):
        if tokens[i] == "[":
            j = tokens.index("]", i)
            letters.append(letter_of(tokens[i + 1:j]))
            i = j + 1
        elif tokens[i] == "]":
            raise ValueError(f"parse error: unbalanced bracket in {text!r}")
        else:
            letters.append((tokens[i],))
            i += 1
    return DWord(letters)


def parse_decorated(text: str) -> DecoratedWord:
    """``(2 1 1 | y x z)``."""
    body = _strip_parens(text)
    if not body:
        return DecoratedWord()
    if "|" not in body:
        raise ValueError(f"parse error: decorated words are written (values | decorations), got {text!r}")
    values, decos = body.split("|")
    word = parse_word(f"({values})")
    atoms = decos.split()
    if len(atoms) != len(word):
        raise ValueError(f"parse error: {len(word)} values but {len(atoms)} decorations in {text!r}")
    return DecoratedWord(zip(word, atoms))
