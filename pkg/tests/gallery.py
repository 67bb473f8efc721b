"""Reference displays in the package's text notation.

Each entry pairs a hand-written expected value with a thunk computing it.
Comparison is on LinComb values, so term order and forest presentation do
not matter once both sides are canonical.

Notation conventions for edge-decorated trees: the decoration of an
edge is written on its upper end, ``*[a:*[]]`` is the single edge ``a``.
With the generic seed every tree ``T`` goes to the fresh letter ``{T}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Callable

from hopforest.algebras import algebra, parse_element
from hopforest.contraction import quotient_normal_form
from hopforest.forests import Family, parse, unit
from hopforest.linear import LinComb, Tensor
from hopforest.morphisms import phi_wqsym
from hopforest.universal import UniversalMorphism, arborification, generic, generic_atom
from hopforest.words import DWord, parse_dword, parse_word


# ---------------------------------------------------------------------------
# reading expected sums


def _terms(text: str):
    """Split ``2*x + y - 3*z`` into (coefficient, body) pairs."""
    text = " ".join(text.split())
    sign, out = 1, []
    for chunk in text.replace(" - ", " + -").split(" + "):
        chunk = chunk.strip()
        if chunk.startswith("-"):
            sign, chunk = -1, chunk[1:].strip()
        else:
            sign = 1
        coef, body = 1, chunk
        head, star, rest = chunk.partition("*")
        if star and head.isdigit() and rest[:1] not in ("[", ""):
            coef, body = int(head), rest
        out.append((sign * coef, body))
    return out


def forests(text: str, family: Family, quotient: bool = False) -> LinComb:
    def leg(s: str):
        f = unit(family) if s.strip() == "1" else parse(s, family)
        return quotient_normal_form(f) if quotient else f

    out = LinComb()
    for c, body in _terms(text):
        legs = body.split(" (x) ")
        out.add(Tensor(leg(s) for s in legs) if len(legs) > 1 else leg(legs[0]), c)
    return out


def words(text: str, reader=parse_word, tensor: bool = True) -> LinComb:
    out = LinComb()
    for c, body in _terms(text):
        legs = [reader(s) for s in body.split(" (x) ")]
        out.add(Tensor(legs) if len(legs) > 1 else legs[0], c)
    return out


# ---------------------------------------------------------------------------
# seed letters


def E(a: str) -> str:
    return f"*[{a}:*[]]"


def corolla(*atoms: str) -> str:
    return "*[" + ",".join(f"{a}:*[]" for a in atoms) + "]"


def chain(*atoms: str) -> str:
    text = "*[]"
    for a in reversed(atoms):
        text = f"*[{a}:{text}]"
    return text


def cherry_on(a: str, b: str, c: str) -> str:
    """Edge a with edges b and c above it."""
    return f"*[{a}:*[{b}:*[],{c}:*[]]]"


def branch(x: str, y: str, z: str) -> str:
    """Edges x and y at the root, z above y."""
    return f"*[{x}:*[],{y}:*[{z}:*[]]]"


def big(a: str, b: str, c: str, d: str) -> str:
    """Edge a carrying c and d, plus edge b at the root."""
    return f"*[{a}:*[{c}:*[],{d}:*[]],{b}:*[]]"


def ev(text: str) -> str:
    return generic_atom(parse(text, Family.EDGE))


def vv(text: str) -> str:
    return generic_atom(parse(text, Family.ROOTED))


def br(*letters: str) -> tuple[str, ...]:
    return tuple(sorted(letters))


def w(*letters) -> LinComb:
    return LinComb.of(DWord(letters))


def perm(*letters) -> LinComb:
    out = LinComb()
    for p in set(permutations(letters)):
        out.add(DWord(p))
    return out


def total(*parts: LinComb) -> LinComb:
    out = LinComb()
    for p in parts:
        out.add_scaled(p)
    return out


# ---------------------------------------------------------------------------
# the displays


@dataclass
class Display:
    name: str
    expected: LinComb
    compute: Callable[[], LinComb]

    def check(self) -> tuple[bool, LinComb, LinComb]:
        got = self.compute()
        return got == self.expected, self.expected, got


def _comul(name: str, text: str) -> Callable[[], LinComb]:
    return lambda: algebra(name).comul(LinComb.of(parse_element(name, text)))


def _antipode(name: str, text: str) -> Callable[[], LinComb]:
    return lambda: algebra(name).antipode(LinComb.of(parse_element(name, text)))


def _mul(name: str, a: str, b: str) -> Callable[[], LinComb]:
    return lambda: algebra(name).mul(LinComb.of(parse_element(name, a)), LinComb.of(parse_element(name, b)))


class Bundle:
    """Several displays checked as one gallery row."""

    def __init__(self, pairs: list[tuple[LinComb, Callable[[], LinComb]]]):
        self.pairs = pairs

    @property
    def expected(self) -> LinComb:
        # tag each part with its index so the parts cannot cancel each other
        return LinComb((Tensor((i, b)), c) for i, (e, _) in enumerate(self.pairs) for b, c in e.items())

    def compute(self) -> LinComb:
        return LinComb((Tensor((i, b)), c) for i, (_, f) in enumerate(self.pairs) for b, c in f().items())


def bundle(name: str, pairs) -> Display:
    b = Bundle(list(pairs))
    return Display(name, b.expected, b.compute)


R, O, P, ED = Family.ROOTED, Family.ORDERED, Family.PREORDERED, Family.EDGE
TQ = "*[*[],*[*[]]]"


def cut_displays() -> list[Display]:
    return [
        Display(
            "cut coproduct of the four-vertex tree",
            forests(
                f"{TQ} (x) 1 + 1 (x) {TQ} + *[] (x) *[*[],*[]] + *[*[]] (x) *[*[]] + *[] (x) *[*[*[]]]"
                " + *[] *[] (x) *[*[]] + *[*[]] *[] (x) *[]",
                R,
            ),
            _comul("h-ck", TQ),
        ),
        Display(
            "decorated cut coproduct",
            forests(
                "a[d[],b[c[]]] (x) 1 + 1 (x) a[d[],b[c[]]] + c[] (x) a[d[],b[]] + b[c[]] (x) a[d[]]"
                " + d[] (x) a[b[c[]]] + c[] d[] (x) a[b[]] + b[c[]] d[] (x) a[]",
                R,
            ),
            _comul("h-ck-d", "a[d[],b[c[]]]"),
        ),
        Display(
            "ordered cut coproduct",
            forests(
                "2[3[],4[1[]]] (x) 1 + 1 (x) 2[3[],4[1[]]] + 1[] (x) 1[3[],2[]] + 2[1[]] (x) 1[2[]]"
                " + 1[] (x) 2[3[1[]]] + 1[] 2[] (x) 1[2[]] + 3[1[]] 2[] (x) 1[]",
                O,
            ),
            _comul("h-o", "2[3[],4[1[]]]"),
        ),
        Display(
            "preordered cut coproduct",
            forests(
                "1[3[],2[1[]]] (x) 1 + 1 (x) 1[3[],2[1[]]] + 1[] (x) 1[3[],2[]] + 2[1[]] (x) 1[2[]]"
                " + 1[] (x) 1[2[1[]]] + 1[] 2[] (x) 1[2[]] + 2[1[]] 3[] (x) 1[]",
                P,
            ),
            _comul("h-po", "1[3[],2[1[]]]"),
        ),
    ]


def contraction_displays() -> list[Display]:
    cpo = lambda text: forests(text, P, quotient=True)
    return [
        Display(
            "contraction coproduct of the four-vertex tree",
            forests(
                f"1 (x) {TQ} + {TQ} (x) 1 + 2**[*[]] (x) *[*[],*[]] + *[*[]] (x) *[*[*[]]]"
                " + *[*[*[]]] (x) *[*[]] + *[*[],*[]] (x) *[*[]] + *[*[]] *[*[]] (x) *[*[]]",
                R,
                quotient=True,
            ),
            _comul("c-ck", TQ),
        ),
        Display(
            "decorated contraction coproduct",
            forests(
                f"{branch('b','a','c')} (x) 1 + 1 (x) {branch('b','a','c')} + {E('c')} (x) {corolla('b','a')}"
                f" + {E('a')} (x) {corolla('b','c')} + {E('b')} (x) {chain('a','c')} + {E('c')} {E('b')} (x) {E('a')}"
                f" + {corolla('b','a')} (x) {E('c')} + {chain('a','c')} (x) {E('b')}",
                ED,
            ),
            _comul("c-ck-d", branch("b", "a", "c")),
        ),
        bundle(
            "preordered contraction coproducts up to two edges",
            [
                (cpo("1[] (x) 1[]"), _comul("c-po", "1[]")),
                (cpo("2[1[]] (x) 1 + 1 (x) 2[1[]]"), _comul("c-po", "2[1[]]")),
                (
                    cpo("2[2[],1[]] (x) 1 + 1 (x) 2[2[],1[]] + 2[1[]] (x) 1[1[]] + 1[1[]] (x) 2[1[]]"),
                    _comul("c-po", "2[2[],1[]]"),
                ),
                (
                    cpo("2[4[]] 3[1[]] (x) 1 + 1 (x) 2[4[]] 3[1[]] + 1[2[]] (x) 2[1[]] + 2[1[]] (x) 1[2[]]"),
                    _comul("c-po", "2[4[]] 3[1[]]"),
                ),
            ],
        ),
        bundle(
            "preordered contraction coproducts in three edges",
            [
                (
                    cpo(
                        "2[3[],3[1[]]] (x) 1 + 1 (x) 2[3[],3[1[]]] + 2[3[]] 3[1[]] (x) 1[2[]] + 1[2[],2[]] (x) 2[1[]]"
                        " + 2[3[1[]]] (x) 1[2[]] + 1[2[]] (x) 2[3[1[]]] + 2[1[]] (x) 1[2[],2[]] + 1[2[]] (x) 2[3[],1[]]"
                    ),
                    _comul("c-po", "2[3[],3[1[]]]"),
                ),
                (
                    cpo(
                        "3[5[],2[]] 4[1[]] (x) 1 + 1 (x) 3[5[],2[]] 4[1[]] + 2[1[]] (x) 2[4[]] 3[1[]]"
                        " + 1[2[]] (x) 3[2[]] 4[1[]] + 2[1[]] (x) 2[3[],1[]] + 3[2[]] 4[1[]] (x) 1[2[]]"
                        " + 2[4[]] 3[1[]] (x) 2[1[]] + 2[3[],1[]] (x) 2[1[]]"
                    ),
                    _comul("c-po", "3[5[],2[]] 4[1[]]"),
                ),
            ],
        ),
        bundle(
            "antipode of the rooted contraction algebra",
            [
                (forests("1", R, True), _antipode("c-ck", "*[]")),
                (forests("-*[*[]] - 1", R, True), _antipode("c-ck", "*[*[]]")),
                (forests("-*[*[],*[]] + 2**[*[]] *[*[]] + 2**[*[]]", R, True), _antipode("c-ck", "*[*[],*[]]")),
                (forests("-*[*[*[]]] + 2**[*[]] *[*[]] + 2**[*[]]", R, True), _antipode("c-ck", "*[*[*[]]]")),
                (
                    forests(
                        f"-{TQ} + 3**[*[]] *[*[],*[]] + 2**[*[],*[]] + 2**[*[]] *[*[*[]]] + *[*[*[]]]"
                        " - 5**[*[]] *[*[]] *[*[]] - 6**[*[]] *[*[]] - *[*[]]",
                        R,
                        True,
                    ),
                    _antipode("c-ck", TQ),
                ),
            ],
        ),
        bundle(
            "antipode of the preordered contraction algebra",
            [
                (cpo("1[]"), _antipode("c-po", "1[]")),
                (cpo("-1[1[]] - 1[]"), _antipode("c-po", "1[1[]]")),
                (cpo("-1[2[]] - 1[]"), _antipode("c-po", "1[2[]]")),
                (cpo("-2[1[]] - 1[]"), _antipode("c-po", "2[1[]]")),
                (cpo("-1[2[],2[]] + 2*1[2[]] 3[4[]] + 2*1[2[]]"), _antipode("c-po", "1[2[],2[]]")),
                (
                    cpo("-2[3[],1[]] + 2[1[]] 3[4[]] + 1[2[]] 4[3[]] + 1[2[]] + 2[1[]]"),
                    _antipode("c-po", "2[3[],1[]]"),
                ),
                (
                    cpo("-1[2[1[]]] + 1[2[]] 3[3[]] + 2[1[]] 3[4[]] + 1[1[]] + 1[2[]]"),
                    _antipode("c-po", "1[2[1[]]]"),
                ),
                (
                    cpo("-2[3[]] 3[1[]] + 1[2[]] 4[3[]] + 2[1[]] 3[4[]] + 2[1[]] + 1[2[]]"),
                    _antipode("c-po", "2[3[]] 3[1[]]"),
                ),
                (
                    cpo(
                        "-2[3[],3[1[]]] + 2[3[]] 3[1[]] 4[5[]] - 1[2[]] 4[3[]] 5[6[]] - 2[1[]] 3[4[]] 5[6[]]"
                        " - 2[1[]] 3[4[]] - 1[2[]] 3[4[]] + 1[2[],2[]] 4[3[]] - 2*1[2[]] 3[4[]] 6[5[]]"
                        " - 2*1[2[]] 4[3[]] + 2[3[1[]]] 3[4[]] - 2[1[]] 3[4[]] 5[6[]] - 1[2[]] 3[4[]]"
                        " - 1[2[]] 4[3[]] 5[6[]] - 2[1[]] 3[4[]] + 1[2[]] 4[5[3[]]] + 2[3[1[]]]"
                        " + 2[1[]] 3[4[],4[]] + 1[2[],2[]] + 1[2[]] 4[5[],3[]] + 2[3[],1[]]"
                    ),
                    _antipode("c-po", "2[3[],3[1[]]]"),
                ),
            ],
        ),
    ]


def word_displays() -> list[Display]:
    return [
        bundle(
            "permutation and packed word products and coproducts",
            [
                (
                    words(
                        "(12354) + (12534) + (15234) + (51234) + (12543)"
                        " + (15243) + (51243) + (15423) + (51423) + (54123)"
                    ),
                    _mul("fqsym", "(123)", "(21)"),
                ),
                (
                    words("1 (x) (41325) + (1) (x) (1324) + (21) (x) (213) + (312) (x) (12) + (4132) (x) (1) + (41325) (x) 1"),
                    _comul("fqsym", "(41325)"),
                ),
                (
                    words(
                        "(11243) + (11423) + (14123) + (41123) + (11432) + (14132)"
                        " + (41132) + (14312) + (41312) + (43112)"
                    ),
                    _mul("wqsym-star", "(112)", "(21)"),
                ),
                (
                    words("1 (x) (21132) + (1) (x) (1132) + (21) (x) (132) + (211) (x) (21) + (2113) (x) (1) + (21132) (x) 1"),
                    _comul("wqsym-star", "(21132)"),
                ),
            ],
        ),
        Display(
            "quasi-shuffle of two two-letter words",
            words(
                "(v1 v2 v3 v4) + (v1 v3 v2 v4) + (v3 v1 v2 v4) + (v1 v3 v4 v2)"
                " + (v3 v1 v4 v2) + (v3 v4 v1 v2) + (v1 [v2 v3] v4) + ([v1 v3] v2 v4)"
                " + (v1 v3 [v2 v4]) + (v3 [v1 v4] v2) + ([v1 v3] [v2 v4])",
                parse_dword,
            ),
            _mul("csh", "(v1 v2)", "(v3 v4)"),
        ),
    ]


def _phi(text: str) -> Callable[[], LinComb]:
    return lambda: phi_wqsym(parse(text, P))


def packed_word_morphism_display() -> Display:
    # the generic pair tddeux{b}{a} is read with a = 1 < b = 2
    rows = [
        ("1[]", "(1)"),
        ("1[] 1[]", "2*(11)"),
        ("1[] 2[]", "(12) + (21)"),
        ("2[1[]]", "(12)"),
        ("1[] 1[] 1[]", "6*(111)"),
        ("1[2[]] 2[]", "(212) + 2*(221)"),
        ("2[1[],2[]]", "(122) + (212)"),
        ("2[] 3[1[]]", "(213) + (123) + (132)"),
        ("1[3[2[]]]", "(231)"),
        ("1[] 3[2[]]", "(123) + (213) + (231)"),
        ("1[2[],2[]]", "2*(221)"),
        ("1[] 1[] 2[]", "2*(112) + 2*(121) + 2*(211)"),
    ]
    return bundle("preordered forests to packed words", [(words(e), _phi(f)) for f, e in rows])


def _morphism(source: str, target: str, text: str, seed=None) -> Callable[[], LinComb]:
    family = R if source == "h" else ED
    return lambda: UniversalMorphism(source, target, seed or generic())(parse(text, family))


def _vertex_displays(target: str):
    a, b, c, d = (vv(x + "[]") for x in "abcd")
    csh = target == "csh"
    extra = lambda *parts: total(*parts) if csh else LinComb()
    yield total(w(a)), _morphism("h", target, "a[]")
    yield total(w(b, a), w(vv("a[b[]]"))), _morphism("h", target, "a[b[]]")
    yield total(w(a, b), w(b, a), extra(w(br(a, b)))), _morphism("h", target, "a[] b[]")
    yield (
        total(w(b, c, a), w(c, b, a), w(b, vv("a[c[]]")), w(c, vv("a[b[]]")), w(vv("a[c[],b[]]")), extra(w(br(c, b), a))),
        _morphism("h", target, "a[c[],b[]]"),
    )
    yield (
        total(w(c, b, a), w(c, vv("a[b[]]")), w(vv("b[c[]]"), a), w(vv("a[b[c[]]]"))),
        _morphism("h", target, "a[b[c[]]]"),
    )
    ad, ab, bc = vv("a[d[]]"), vv("a[b[]]"), vv("b[c[]]")
    yield (
        total(
            w(c, b, d, a), w(c, d, b, a), w(d, c, b, a), w(c, b, ad), w(c, d, ab), w(d, c, ab),
            w(bc, d, a), w(d, bc, a), w(bc, ad), w(c, vv("a[d[],b[]]")), w(d, vv("a[b[c[]]]")),
            w(vv("a[d[],b[c[]]]")),
            extra(w(c, br(b, d), a), w(br(c, d), b, a), w(br(bc, d), a)),
        ),
        _morphism("h", target, "a[d[],b[c[]]]"),
    )


def _arborification_rows():
    rows = [
        ("a[]", "(a)"),
        ("a[b[]]", "(b a)"),
        ("a[] b[]", "(a b) + (b a)"),
        ("a[c[],b[]]", "(b c a) + (c b a)"),
        ("a[b[c[]]]", "(c b a)"),
        ("a[d[],b[c[]]]", "(c b d a) + (c d b a) + (d c b a)"),
    ]
    for f, e in rows:
        yield words(e, parse_dword), _morphism("h", "sh", f, arborification())


def _edge_displays(target: str):
    a, b, c, d = (ev(E(x)) for x in "abcd")
    csh = target == "csh"
    extra = lambda *parts: total(*parts) if csh else LinComb()
    yield w(a), _morphism("c", target, E("a"))
    yield total(w(ev(corolla("b", "a"))), w(a, b), w(b, a)), _morphism("c", target, corolla("b", "a"))
    yield total(w(ev(chain("a", "b"))), w(a, b), w(b, a)), _morphism("c", target, chain("a", "b"))
    T = corolla("a", "b", "c")
    yield (
        total(
            w(ev(T)),
            w(a, ev(corolla("c", "b"))), w(ev(corolla("c", "b")), a),
            w(b, ev(corolla("c", "a"))), w(ev(corolla("c", "a")), b),
            w(c, ev(corolla("b", "a"))), w(ev(corolla("b", "a")), c),
            perm(a, b, c),
        ),
        _morphism("c", target, T),
    )
    T = cherry_on("a", "b", "c")
    yield (
        total(
            w(ev(T)),
            w(a, ev(corolla("c", "b"))), w(ev(corolla("c", "b")), a),
            w(c, ev(chain("a", "b"))), w(ev(chain("a", "b")), c),
            w(b, ev(chain("a", "c"))), w(ev(chain("a", "c")), b),
            perm(a, b, c),
        ),
        _morphism("c", target, T),
    )
    T = branch("b", "a", "c")
    yield (
        total(
            w(ev(T)),
            w(a, ev(corolla("b", "c"))),
            w(b, ev(chain("a", "c"))), w(ev(chain("a", "c")), b),
            w(c, ev(corolla("b", "a"))), w(ev(corolla("b", "a")), c),
            perm(a, b, c),
            extra(w(br(b, c), a)),
        ),
        _morphism("c", target, T),
    )
    T = big("a", "b", "c", "d")
    ba, dc, ad, ac, bc, bd, cb, db = (
        ev(corolla("b", "a")), ev(corolla("d", "c")), ev(chain("a", "d")), ev(chain("a", "c")),
        ev(corolla("b", "c")), ev(corolla("b", "d")), ev(corolla("c", "b")), ev(corolla("d", "b")),
    )
    yield (
        total(
            w(ev(T)),
            w(a, ev(corolla("c", "d", "b"))),
            w(b, ev(cherry_on("a", "c", "d"))), w(ev(cherry_on("a", "c", "d")), b),
            w(c, ev(branch("b", "a", "d"))), w(ev(branch("b", "a", "d")), c),
            w(d, ev(branch("b", "a", "c"))), w(ev(branch("b", "a", "c")), d),
            w(ba, dc), w(dc, ba), w(ad, bc), w(ac, bd),
            perm(ba, c, d), perm(dc, a, b), perm(ad, b, c), perm(ac, b, d),
            w(a, cb, d), w(a, d, cb), w(d, a, cb),
            w(a, db, c), w(a, c, db), w(c, a, db),
            perm(a, b, c, d),
            extra(
                w(br(b, c), ad), w(br(b, d), ac), w(br(b, dc), a),
                w(c, br(b, d), a), w(br(b, d), a, c), w(br(b, d), c, a),
                w(br(b, c), a, d), w(br(b, c), d, a), w(d, br(b, c), a),
            ),
        ),
        _morphism("c", target, T),
    )


def universal_display() -> Display:
    pairs = [
        *_vertex_displays("sh"),
        *_arborification_rows(),
        *_vertex_displays("csh"),
        *_edge_displays("sh"),
        *_edge_displays("csh"),
    ]
    return bundle("morphisms into shuffle and quasi-shuffle algebras", pairs)


def all_displays() -> list[Display]:
    return [*cut_displays(), *contraction_displays(), *word_displays(), packed_word_morphism_display(), universal_display()]
