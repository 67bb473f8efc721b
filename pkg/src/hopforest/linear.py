"""Exact linear combinations, tensors, and generic graded bialgebra machinery.

Every algebra in the package is described by a :class:`GradedBialgebra`: a
unit, a degree function, a product and a coproduct on basis elements, and a
basis enumerator per degree.  Everything else (linear extensions, reduced
coproduct, antipode, axiom checks) is derived here once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian
from typing import Callable, Hashable, Iterable, Iterator, Mapping

Coefficient = int | Fraction


def _normalize(c: Coefficient) -> Coefficient:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def format_coefficient(c: Coefficient) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class Tensor(tuple):
    """An ordered tuple of basis elements; nested tensors are flattened."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[Hashable] = ()):
        flat: list = []
        for p in parts:
            if isinstance(p, Tensor):
                flat.extend(p)
            else:
                flat.append(p)
        return super().__new__(cls, flat)

    def __str__(self) -> str:
        return " (x) ".join(map(str, self))

    def __repr__(self) -> str:
        return f"Tensor({tuple(self)!r})"


class LinComb(dict):
    """A finite formal sum: basis element -> nonzero exact rational.

    Coefficients are ints or Fractions; zero coefficients are never stored.
    Iteration follows insertion, rendering follows the canonical basis text.
    """

    def __init__(self, terms: Mapping | Iterable[tuple[Hashable, Coefficient]] | None = None):
        super().__init__()
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for b, c in items:
                self.add(b, c)

    @classmethod
    def of(cls, basis: Hashable, coefficient: Coefficient = 1) -> LinComb:
        out = cls()
        out.add(basis, coefficient)
        return out

    def add(self, basis: Hashable, coefficient: Coefficient = 1) -> None:
        if not coefficient:
            return
        new = self.get(basis, 0) + coefficient
        if new:
            self[basis] = _normalize(new)
        else:
            del self[basis]

    def add_scaled(self, other: Mapping, scale: Coefficient = 1) -> None:
        for b, c in other.items():
            self.add(b, scale * c)

    def __add__(self, other: Mapping) -> LinComb:
        out = LinComb(self)
        out.add_scaled(other)
        return out

    def __sub__(self, other: Mapping) -> LinComb:
        out = LinComb(self)
        out.add_scaled(other, -1)
        return out

    def __neg__(self) -> LinComb:
        return LinComb((b, -c) for b, c in self.items())

    def __mul__(self, scalar: Coefficient) -> LinComb:
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return LinComb((b, scalar * c) for b, c in self.items())

    __rmul__ = __mul__

    def map(self, f: Callable[[Hashable], Mapping]) -> LinComb:
        """Linear extension of ``f`` (basis -> LinComb)."""
        out = LinComb()
        for b, c in self.items():
            out.add_scaled(f(b), c)
        return out

    def map_basis(self, f: Callable[[Hashable], Hashable]) -> LinComb:
        """Linear extension of a basis-to-basis map."""
        out = LinComb()
        for b, c in self.items():
            out.add(f(b), c)
        return out

    def coefficient(self, basis: Hashable) -> Coefficient:
        return self.get(basis, 0)

    def sorted_items(self) -> list[tuple[Hashable, Coefficient]]:
        return sorted(self.items(), key=lambda bc: str(bc[0]))

    def total_multiplicity(self) -> Coefficient:
        return sum(self.values())

    def __str__(self) -> str:
        if not self:
            return "0"
        return " + ".join(f"{format_coefficient(c)}*{b}" for b, c in self.sorted_items())

    def __repr__(self) -> str:
        return f"LinComb({str(self)!r})"


def lin_extend_1(f: Callable[[Hashable], Mapping]) -> Callable[[Mapping], LinComb]:
    return lambda x: LinComb(x).map(f)


def lin_extend_2(f: Callable[[Hashable, Hashable], Mapping]) -> Callable[[Mapping, Mapping], LinComb]:
    def extended(x: Mapping, y: Mapping) -> LinComb:
        out = LinComb()
        for (bx, cx), (by, cy) in cartesian(x.items(), y.items()):
            out.add_scaled(f(bx, by), cx * cy)
        return out

    return extended


def tensor(*factors: Mapping) -> LinComb:
    """Tensor product of linear combinations (flattening nested tensors)."""
    out = LinComb()
    for combo in cartesian(*(f.items() for f in factors)):
        coefficient = 1
        for _, c in combo:
            coefficient *= c
        out.add(Tensor(b for b, _ in combo), coefficient)
    return out


def tensor_map(x: Mapping, *maps: Callable[[Hashable], Mapping]) -> LinComb:
    """Apply ``maps[i]`` to the i-th leg of every tensor in ``x``."""
    out = LinComb()
    for t, c in x.items():
        out.add_scaled(tensor(*(m(b) for m, b in zip(maps, t))), c)
    return out


@dataclass(eq=False)
class GradedBialgebra:
    """A graded connected bialgebra given on its basis.

    ``mul_basis`` and ``comul_basis`` return LinCombs; the coproduct's keys are
    two-legged :class:`Tensor` objects.  ``basis(n)`` lists the degree-n basis.
    """

    name: str
    unit: Hashable
    degree: Callable[[Hashable], int]
    mul_basis: Callable[[Hashable, Hashable], Mapping]
    comul_basis: Callable[[Hashable], Mapping]
    basis: Callable[[int], list]
    _antipode_memo: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if self.degree(self.unit) != 0:
            raise ValueError(f"{self.name}: unit must have degree 0")
        if list(self.basis(0)) != [self.unit]:
            raise ValueError(f"{self.name}: not connected (degree 0 is not spanned by the unit)")

    def one(self) -> LinComb:
        return LinComb.of(self.unit)

    def mul(self, x: Mapping, y: Mapping) -> LinComb:
        out = LinComb()
        for bx, cx in x.items():
            for by, cy in y.items():
                if bx == self.unit:
                    out.add(by, cx * cy)
                elif by == self.unit:
                    out.add(bx, cx * cy)
                else:
                    out.add_scaled(self.mul_basis(bx, by), cx * cy)
        return out

    def comul(self, x: Mapping) -> LinComb:
        return LinComb(x).map(self._comul_basis)

    def _comul_basis(self, b: Hashable) -> Mapping:
        if b == self.unit:
            return LinComb.of(Tensor((b, b)))
        return self.comul_basis(b)

    def counit(self, x: Mapping) -> Coefficient:
        return x.get(self.unit, 0)

    def reduced_coproduct(self, x: Mapping) -> LinComb:
        if self.unit in x:
            raise ValueError(f"{self.name}: reduced coproduct needs an element without unit component")
        out = self.comul(x)
        for b, c in x.items():
            out.add(Tensor((b, self.unit)), -c)
            out.add(Tensor((self.unit, b)), -c)
        return out

    def antipode_basis(self, b: Hashable) -> LinComb:
        memo = self._antipode_memo
        if b in memo:
            return memo[b]
        if b == self.unit:
            result = self.one()
        else:
            result = LinComb.of(b, -1)
            for (left, right), c in self.reduced_coproduct(LinComb.of(b)).items():
                result.add_scaled(self.mul(self.antipode_basis(left), LinComb.of(right)), -c)
        memo[b] = result
        return result

    def antipode(self, x: Mapping) -> LinComb:
        return LinComb(x).map(self.antipode_basis)

    def iter_basis(self, max_degree: int, min_degree: int = 0) -> Iterator[Hashable]:
        for n in range(min_degree, max_degree + 1):
            yield from self.basis(n)


def iterated_coproduct(H: GradedBialgebra, x: Mapping, k: int) -> LinComb:
    """Delta^(k) = (Delta (x) Id^(k-1)) o Delta^(k-1), with Delta^(0) = Id."""
    out = LinComb((Tensor((b,)), c) for b, c in x.items())
    for _ in range(k):
        nxt = LinComb()
        for t, c in out.items():
            for head, c2 in H.comul(LinComb.of(t[0])).items():
                nxt.add(Tensor((head, *t[1:])), c * c2)
        out = nxt
    return out


# ---------------------------------------------------------------------------
# axiom checking


@dataclass
class Failure:
    identity: str
    element: str
    lhs: str
    rhs: str

    def __str__(self) -> str:
        return f"{self.identity} fails on {self.element}: {self.lhs} != {self.rhs}"


@dataclass
class AxiomReport:
    algebra: str
    max_degree: int
    checked: dict[str, int] = field(default_factory=dict)
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, identity: str, element: object, lhs: Mapping, rhs: Mapping) -> None:
        self.checked[identity] = self.checked.get(identity, 0) + 1
        if LinComb(lhs) != LinComb(rhs):
            self.failures.append(Failure(identity, str(element), str(LinComb(lhs)), str(LinComb(rhs))))

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        counts = ", ".join(f"{k}={v}" for k, v in self.checked.items())
        lines = [f"{status} {self.algebra} (degree <= {self.max_degree}): {counts}"]
        lines += [f"  {f}" for f in self.failures[:10]]
        return "\n".join(lines)


def _degree_compositions(total_max: int, parts: int) -> Iterator[tuple[int, ...]]:
    for degs in cartesian(range(1, total_max + 1), repeat=parts):
        if sum(degs) <= total_max:
            yield degs


def check_axioms(H: GradedBialgebra, max_degree: int, *, antipode: bool = True) -> AxiomReport:
    """Exhaustively verify the graded bialgebra axioms (and the antipode) up to a degree."""
    report = AxiomReport(H.name, max_degree)
    by_degree = {n: list(H.basis(n)) for n in range(max_degree + 1)}
    one = H.one()
    ident = lambda b: LinComb.of(b)  # noqa: E731

    report.record("unit coproduct", H.unit, H.comul(one), LinComb.of(Tensor((H.unit, H.unit))))
    for n, elements in by_degree.items():
        for b in elements:
            x = LinComb.of(b)
            delta = H.comul(x)
            bad = [t for t in delta if sum(H.degree(p) for p in t) != n]
            report.record("coproduct homogeneity", b, LinComb((t, 1) for t in bad), LinComb())
            left = LinComb()
            right = LinComb()
            for (u, v), c in delta.items():
                if u == H.unit:
                    left.add(v, c)
                if v == H.unit:
                    right.add(u, c)
            report.record("left counit", b, left, x)
            report.record("right counit", b, right, x)
            lhs = tensor_map(delta, H._comul_basis, ident)
            rhs = tensor_map(delta, ident, H._comul_basis)
            report.record("coassociativity", b, lhs, rhs)
            if antipode:
                expected = one * H.counit(x)
                s_id = LinComb()
                id_s = LinComb()
                for (u, v), c in delta.items():
                    s_id.add_scaled(H.mul(H.antipode_basis(u), LinComb.of(v)), c)
                    id_s.add_scaled(H.mul(LinComb.of(u), H.antipode_basis(v)), c)
                report.record("antipode S*Id", b, s_id, expected)
                report.record("antipode Id*S", b, id_s, expected)

    for degs in _degree_compositions(max_degree, 2):
        for a, b in cartesian(by_degree[degs[0]], by_degree[degs[1]]):
            ab = H.mul(LinComb.of(a), LinComb.of(b))
            bad = [t for t in ab if H.degree(t) != sum(degs)]
            report.record("product homogeneity", (a, b), LinComb((t, 1) for t in bad), LinComb())
            lhs = H.comul(ab)
            rhs = LinComb()
            for (a1, a2), ca in H.comul(LinComb.of(a)).items():
                for (b1, b2), cb in H.comul(LinComb.of(b)).items():
                    left = H.mul(LinComb.of(a1), LinComb.of(b1))
                    right = H.mul(LinComb.of(a2), LinComb.of(b2))
                    rhs.add_scaled(tensor(left, right), ca * cb)
            report.record("coproduct multiplicative", _pair(a, b), lhs, rhs)
    for degs in _degree_compositions(max_degree, 3):
        for a, b, c in cartesian(*(by_degree[d] for d in degs)):
            A, B, C = LinComb.of(a), LinComb.of(b), LinComb.of(c)
            report.record("associativity", _pair(a, b, c), H.mul(H.mul(A, B), C), H.mul(A, H.mul(B, C)))
    return report


def _pair(*xs: object) -> str:
    return " , ".join(map(str, xs))


# ---------------------------------------------------------------------------
# exact rank


def exact_rank(rows: list[list[Coefficient]]) -> int:
    """Rank over Q by fraction-free elimination (rows rescaled to primitive integers)."""
    matrix = [_integer_row(r) for r in rows if any(r)]
    rank = 0
    ncols = len(matrix[0]) if matrix else 0
    for col in range(ncols):
        pivot_row = next((i for i in range(rank, len(matrix)) if matrix[i][col]), None)
        if pivot_row is None:
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        top = matrix[rank]
        for i in range(rank + 1, len(matrix)):
            factor = matrix[i][col]
            if factor:
                matrix[i] = _primitive([top[col] * x - factor * y for x, y in zip(matrix[i], top)])
        rank += 1
    return rank


def _integer_row(row: list[Coefficient]) -> list[int]:
    scale = math.lcm(*(Fraction(c).denominator for c in row))
    return _primitive([int(Fraction(c) * scale) for c in row])


def _primitive(row: list[int]) -> list[int]:
    g = math.gcd(*row)
    return [x // g for x in row] if g > 1 else row


class Echelon:
    """Incrementally grown row-echelon basis of a span of linear combinations."""

    def __init__(self) -> None:
        self.rows: dict[Hashable, LinComb] = {}  # pivot basis element -> row with pivot coefficient 1

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, x: Mapping) -> LinComb:
        x = LinComb({k: Fraction(v) for k, v in x.items()})
        for pivot, row in self.rows.items():
            c = x.get(pivot)
            if c:
                x.add_scaled(row, -c)
        return x

    def add(self, x: Mapping) -> bool:
        """Insert ``x``; return whether it enlarged the span."""
        r = self.reduce(x)
        if not r:
            return False
        pivot = min(r, key=str)
        r = r * Fraction(1, r[pivot])
        for row in self.rows.values():
            c = row.get(pivot)
            if c:
                row.add_scaled(r, -c)
        self.rows[pivot] = r
        return True

    def contains(self, x: Mapping) -> bool:
        return not self.reduce(x)
