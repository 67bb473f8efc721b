from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from hopforest.algebras import algebra
from hopforest.cuts import cut_hopf
from hopforest.forests import parse
from hopforest.linear import (
    Echelon,
    GradedBialgebra,
    LinComb,
    Tensor,
    check_axioms,
    exact_rank,
    iterated_coproduct,
    lin_extend_2,
)

coefficients = st.one_of(st.integers(-5, 5), st.fractions(min_value=-3, max_value=3, max_denominator=4))
combs = st.dictionaries(st.sampled_from("abcde"), coefficients, max_size=5).map(LinComb)


def test_bilinear_extension():
    concat = lin_extend_2(lambda u, v: LinComb.of(u + v))
    x = LinComb([("x", 1), ("y", 1)])
    assert concat(x, LinComb.of("z")) == LinComb([("xz", 1), ("yz", 1)])


def test_zero_scalar_gives_empty():
    assert LinComb.of("b", 0) == LinComb()
    assert 0 * LinComb([("a", 3)]) == LinComb()


def test_cancellation_prunes():
    x = LinComb([("b1", 2), ("b2", 3)]) + LinComb([("b1", -2)])
    assert x == LinComb([("b2", 3)]) and "b1" not in x


def test_rendering():
    x = LinComb([("b", Fraction(-1, 2)), ("a", 3)])
    assert str(x) == "3*a + -1/2*b"
    assert str(LinComb()) == "0"
    assert str(Tensor(("u", Tensor(("v", "w"))))) == "u (x) v (x) w"


@given(combs, combs)
def test_addition_commutes(x, y):
    assert x + y == y + x


@given(combs)
def test_subtraction_cancels(x):
    assert x - x == LinComb()


@given(combs, coefficients)
def test_no_zero_coefficients_stored(x, c):
    assert all(v != 0 for v in (x * c).values())


def test_reduced_coproduct_examples():
    H = algebra("h-ck")
    assert H.reduced_coproduct(LinComb.of(parse("*[]"))) == LinComb()
    assert H.reduced_coproduct(LinComb.of(parse("*[*[]]"))) == LinComb.of(Tensor((parse("*[]"), parse("*[]"))))
    assert len(H.reduced_coproduct(LinComb.of(parse("*[*[],*[*[]]]")))) == 5
    with pytest.raises(ValueError):
        H.reduced_coproduct(H.one())


def test_unconnected_registration_rejected():
    with pytest.raises(ValueError):
        GradedBialgebra("bad", "1", lambda b: 0, None, None, lambda n: ["1", "x"] if n == 0 else [])


def test_antipode_examples():
    H = algebra("c-ck")
    s = H.antipode(LinComb.of(parse("*[*[],*[]]")))
    expected = LinComb([(parse("*[*[],*[]]"), -1), (parse("*[*[]] *[*[]]"), 2)])
    assert s == expected


def test_antipode_is_involutive_on_commutative_contraction_algebra():
    H = algebra("c-ck")
    for b in H.iter_basis(4):
        assert H.antipode(H.antipode(LinComb.of(b))) == LinComb.of(b), b


def test_mutant_dropping_a_cut_term_fails_coassociativity():
    honest = cut_hopf("h-ck")

    def lossy(forest):
        delta = LinComb(honest.comul_basis(forest))
        inner = [t for t in delta if not t[0].is_unit and not t[1].is_unit]
        if inner and forest.n_vertices == 3:
            del delta[min(inner, key=str)]
        return delta

    mutant = GradedBialgebra("mutant", honest.unit, honest.degree, honest.mul_basis, lossy, honest.basis)
    report = check_axioms(mutant, 3, antipode=False)
    assert not report.ok
    assert any(f.identity == "coassociativity" for f in report.failures)
    assert "FAIL" in report.summary()


def test_iterated_coproduct_matches_counting_formula():
    # the k-fold contraction coproduct of an n-edge forest has (k+1)^n terms
    H = algebra("c-ck")
    for n in range(5):
        for f in H.basis(n):
            for k in range(1, 4):
                assert iterated_coproduct(H, LinComb.of(f), k).total_multiplicity() == (k + 1) ** n


# ---------------------------------------------------------------------------
# exact rank, against an independent Echelon span


def _rank_by_echelon(rows):
    e = Echelon()
    for r in rows:
        e.add(LinComb((j, c) for j, c in enumerate(r)))
    return len(e)


@settings(max_examples=60)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), max_size=6))
def test_exact_rank_agrees_with_echelon(rows):
    assert exact_rank(rows) == _rank_by_echelon(rows)


def test_exact_rank_small_cases():
    assert exact_rank([]) == 0
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert exact_rank([[Fraction(1, 2), 1], [1, Fraction(1, 3)]]) == 2
    # every 0/1 row of length 3 spans the whole space
    assert exact_rank([list(r) for r in product((0, 1), repeat=3)]) == 3


def test_echelon_membership():
    e = Echelon()
    assert e.add(LinComb([("a", 1), ("b", 1)]))
    assert not e.add(LinComb([("a", 2), ("b", 2)]))
    assert e.contains(LinComb([("a", -3), ("b", -3)]))
    assert not e.contains(LinComb.of("a"))
