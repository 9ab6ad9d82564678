"""One-point evaluation codes on the Hermitian curve x^(q+1) = y^q + y.

The curve over GF(q^2) has q^3 affine points; pole orders at the single
point at infinity form the semigroup generated by q and q+1, and the
monomials x^a y^b with b <= q-1 realize every pole order a*q + b*(q+1)
exactly once. Evaluating those monomials in pole order at a point set
yields the nested code sequence whose rank-growth orders form W*.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional, Sequence

from .errors import (
    DuplicatePoints,
    FieldTooLarge,
    PointNotOnCurve,
    PreconditionViolated,
    SearchSpaceTooLarge,
)
from .gf import MAX_ORDER, Field, FieldElement
from .semigroup import NumericalSemigroup

ISOMETRY_SEARCH_CAP = 10_000_000

# Point order over GF(4), frozen: (x, y) encodings with 2 = class of x,
# 3 = class of x + 1.
_Q2_POINT_ORDER = ((0, 0), (2, 2), (3, 2), (1, 2), (2, 3), (3, 3), (1, 3), (0, 1))


def _prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise ValueError(f"q = {q} is not a prime power")
    return p, e


def curve_genus(q: int) -> int:
    return q * (q - 1) // 2


def hermitian_field(q: int) -> Field:
    """GF(q^2), the field of definition of the affine points."""
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if q * q > MAX_ORDER:
        raise FieldTooLarge(f"GF({q * q}) exceeds the supported order {MAX_ORDER}")
    p, e = _prime_power(q)
    return Field(p, 2 * e)


@dataclass(frozen=True)
class CurvePoint:
    x: FieldElement
    y: FieldElement

    def coords(self) -> tuple[int, int]:
        return (self.x.value, self.y.value)

    def __repr__(self) -> str:
        return f"CurvePoint({self.x.value}, {self.y.value})"


@dataclass(frozen=True)
class BasisFunction:
    """The monomial x^a y^b with pole order a*q + b*(q+1) at infinity."""

    x_exp: int
    y_exp: int
    q: int

    @property
    def pole_order(self) -> int:
        return self.x_exp * self.q + self.y_exp * (self.q + 1)

    def evaluate(self, point: CurvePoint) -> FieldElement:
        f = point.x.field
        return f.element(
            f.mul(f.pow(point.x.value, self.x_exp), f.pow(point.y.value, self.y_exp))
        )

    def __str__(self) -> str:
        if self.x_exp == 0 and self.y_exp == 0:
            return "1"
        parts = []
        if self.x_exp:
            parts.append("x" if self.x_exp == 1 else f"x^{self.x_exp}")
        if self.y_exp:
            parts.append("y" if self.y_exp == 1 else f"y^{self.y_exp}")
        return "".join(parts)


def _on_curve(field: Field, x: int, y: int, q: int) -> bool:
    return field.pow(x, q + 1) == field.add(field.pow(y, q), y)


def hermitian_points(q: int) -> list[CurvePoint]:
    """All q^3 affine points; for q = 2 in the frozen eight-point order,
    otherwise sorted by coordinate encodings."""
    field = hermitian_field(q)
    coords = [
        (x, y)
        for x in range(field.q)
        for y in range(field.q)
        if _on_curve(field, x, y, q)
    ]
    assert len(coords) == q**3
    if q == 2:
        assert sorted(coords) == sorted(_Q2_POINT_ORDER)
        coords = list(_Q2_POINT_ORDER)
    return [CurvePoint(field.element(x), field.element(y)) for (x, y) in coords]


def monomial_basis_iter(q: int) -> Iterator[BasisFunction]:
    """Basis functions in strictly increasing pole order."""
    _prime_power(q)
    m = 0
    while True:
        b = m % q
        rest = m - b * (q + 1)
        if rest >= 0:
            yield BasisFunction(rest // q, b, q)
        m += 1


def monomial_basis(q: int, count: int) -> list[BasisFunction]:
    """The first `count` basis functions, ordered by pole order."""
    if count < 1:
        raise ValueError("count must be >= 1")
    it = monomial_basis_iter(q)
    return [next(it) for _ in range(count)]


def weierstrass_semigroup(q: int) -> NumericalSemigroup:
    """Pole orders at the point at infinity: the semigroup <q, q+1>."""
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    return NumericalSemigroup([q, q + 1])


@dataclass(frozen=True)
class CodeSequence:
    """Rank profile of evaluating the monomial basis at a point set.

    `rows` holds one evaluation row (integer encodings) per scanned basis
    function and `rank_profile` the rank after that row; `generator_rows`
    are the n rows at which the rank grew, so the first i of them generate
    the i-dimensional code of the sequence. `wstar` lists the pole orders
    of those rank jumps, starting with 0.
    """

    q: int
    genus: int
    field: Field
    points: tuple[CurvePoint, ...]
    basis: tuple[BasisFunction, ...]
    rows: tuple[tuple[int, ...], ...]
    rank_profile: tuple[int, ...]
    wstar: tuple[int, ...]
    generator_rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.points)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "genus": self.genus,
            "n": self.n,
            "points": [list(p.coords()) for p in self.points],
            "wstar": list(self.wstar),
            "isometry_dual": isometry_dual_criterion(self),
            "generator_matrix": [list(r) for r in self.generator_rows],
        }


def _echelon_reduce(
    row: Sequence[int], echelon: list[tuple[int, list[int]]], field: Field
) -> list[int]:
    """Reduce `row` against normalized echelon rows (pivot entries are 1)."""
    mul, add = field.mul_table, field.add_table
    r = list(row)
    for piv, erow in echelon:
        if r[piv]:
            f = field.neg(r[piv])
            r = [add[v][mul[f][w]] for v, w in zip(r, erow)]
    return r


def compute_wstar(points: Sequence[CurvePoint], q: int) -> CodeSequence:
    """Evaluate basis functions in pole order until the code reaches full rank."""
    points = tuple(points)
    if not points:
        raise ValueError("at least one evaluation point is required")
    field = hermitian_field(q)
    for pt in points:
        if pt.x.field != field or pt.y.field != field:
            raise ValueError(f"point {pt!r} does not live in {field!r}")
        if not _on_curve(field, pt.x.value, pt.y.value, q):
            raise PointNotOnCurve(f"{pt!r} violates x^{q + 1} = y^{q} + y")
    if len({p.coords() for p in points}) != len(points):
        raise DuplicatePoints("evaluation points must be pairwise distinct")

    n = len(points)
    g = curve_genus(q)
    mul, add, inv = field.mul_table, field.add_table, field.inv_table
    echelon: list[tuple[int, list[int]]] = []
    basis, rows, profile, wstar, gen_rows = [], [], [], [], []
    for fn in monomial_basis_iter(q):
        if fn.pole_order > n + 2 * g - 1:
            raise AssertionError("rank must reach n by pole order n + 2g - 1")
        row = [
            mul[field.pow(pt.x.value, fn.x_exp)][field.pow(pt.y.value, fn.y_exp)]
            for pt in points
        ]
        basis.append(fn)
        rows.append(tuple(row))
        reduced = _echelon_reduce(row, echelon, field)
        piv = next((k for k, v in enumerate(reduced) if v), None)
        if piv is not None:
            scale = inv[reduced[piv]]
            echelon.append((piv, [mul[scale][v] for v in reduced]))
            wstar.append(fn.pole_order)
            gen_rows.append(tuple(row))
        profile.append(len(echelon))
        if len(echelon) == n:
            break
    return CodeSequence(
        q=q,
        genus=g,
        field=field,
        points=points,
        basis=tuple(basis),
        rows=tuple(rows),
        rank_profile=tuple(profile),
        wstar=tuple(wstar),
        generator_rows=tuple(gen_rows),
    )


def isometry_dual_criterion(cs: CodeSequence) -> bool:
    """True iff n + 2g - 1 is one of the rank-jump pole orders."""
    return (cs.n + 2 * cs.genus - 1) in cs.wstar


def find_isometry_vector(cs: CodeSequence) -> Optional[tuple[FieldElement, ...]]:
    """Exhaustive search for an all-nonzero x making the sequence isometry-dual.

    x works iff for every i the componentwise product x * C^i equals the
    dual of C^(n-i). Since the entries of x are nonzero, the dimensions
    already match, so the subspace equalities reduce to the bilinear
    conditions sum_k x_k r_a[k] r_b[k] = 0 over all generator pairs with
    a + b <= n. Solutions are closed under global scaling, so the search
    fixes x_1 = 1; the first hit (lexicographic in element encodings) is
    then the lexicographically first solution overall. Returns None when
    no vector exists.
    """
    n, field = cs.n, cs.field
    if (field.q - 1) ** n > ISOMETRY_SEARCH_CAP:
        raise SearchSpaceTooLarge(
            f"{field.q - 1}^{n} candidate vectors exceed the cap {ISOMETRY_SEARCH_CAP}"
        )
    mul, add = field.mul_table, field.add_table
    rows = cs.generator_rows
    pair_products = []
    for a in range(1, n + 1):
        for b in range(1, n + 1 - a):
            ra, rb = rows[a - 1], rows[b - 1]
            pair_products.append(tuple(mul[ra[k]][rb[k]] for k in range(n)))
    for tail in product(range(1, field.q), repeat=n - 1):
        x = (1,) + tail
        for u in pair_products:
            acc = 0
            for k in range(n):
                acc = add[acc][mul[u[k]][x[k]]]
            if acc:
                break
        else:
            return tuple(field.element(v) for v in x)
    return None


def ideal_complement_check(cs: CodeSequence, W: NumericalSemigroup) -> bool:
    """Whether W \\ W* is an ideal of W; defined for n > 2g + 2 only."""
    if cs.n <= 2 * cs.genus + 2:
        raise PreconditionViolated(
            f"check requires n > 2g + 2 = {2 * cs.genus + 2}, got n = {cs.n}"
        )
    wstar = set(cs.wstar)
    for t in cs.wstar:
        for s in W.members(t):
            if 0 < s and W.contains(t - s) and (t - s) not in wstar:
                return False
    return True
