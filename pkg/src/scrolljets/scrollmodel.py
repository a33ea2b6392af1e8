"""Explicit decomposable scrolls over the projective line, with exact k-jet
matrices of the section basis and exact rank computation.

A scroll here is P(O(a_1) + ... + O(a_n)) embedded by its tautological
bundle, so it has degree d = sum a_i and spans projective N-space with
N = d + n - 1.  Around any point there are local coordinates
(u, v_2, ..., v_n): u on the base, the v's on the fiber, and every
hyperplane section restricts to a(u) + sum_j v_j b_j(u).  Consequently all
partial derivatives of order h >= 2 vanish identically except the pure
d/du^h ones and the mixed d/du^(h-1) d/dv_j ones, which is why the k-jet
matrix below keeps only those kn+1 columns.

Charts: two base charts ("0" and "inf", exchanging u with 1/u, which
reverses the exponent m of a degree-a section to a - m) and n fiber charts
(fiber chart i normalizes the i-th homogeneous fiber coordinate to 1).
Everything is exact rational arithmetic; ranks come from fraction-free
elimination with deterministic pivoting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm, perm
from typing import List, NamedTuple, Sequence, Tuple, Union

Rational = Union[int, Fraction]

BASE_ZERO = "0"
BASE_INF = "inf"
_BASE_CHARTS = (BASE_ZERO, BASE_INF)


@dataclass(frozen=True)
class DecomposableScroll:
    """P(O(a_1) + ... + O(a_n)) over the projective line."""

    degrees: Tuple[int, ...]

    def __post_init__(self) -> None:
        degrees = tuple(int(a) for a in self.degrees)
        if not degrees:
            raise ValueError("a scroll needs at least one summand")
        if any(a <= 0 for a in degrees):
            raise ValueError("all summand degrees must be positive integers")
        object.__setattr__(self, "degrees", degrees)

    @classmethod
    def from_text(cls, text: str) -> "DecomposableScroll":
        """Parse a comma-separated degree list such as "1,2"."""
        try:
            degrees = tuple(int(part) for part in text.split(","))
        except ValueError as exc:
            raise ValueError(f"bad scroll spec {text!r}: {exc}") from None
        return cls(degrees)

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def d(self) -> int:
        return sum(self.degrees)

    @property
    def N(self) -> int:
        return self.d + self.n - 1

    def degree_of(self, summand: int) -> int:
        """Degree of a summand, indexed 1..n."""
        if not 1 <= summand <= self.n:
            raise ValueError(f"summand index {summand} outside 1..{self.n}")
        return self.degrees[summand - 1]

    def section_basis(
        self, base_chart: str, fiber_chart: int
    ) -> Tuple["SectionMonomial", ...]:
        """The N+1 basis sections as monomials in the given chart.

        In base chart "0" and fiber chart i, the sections of summand j are
        v_j * u^m for 0 <= m <= a_j (with the v_i of the chart summand
        itself normalized away).  In base chart "inf" the exponents
        reverse, m -> a_j - m.
        """
        _check_chart(self, base_chart, fiber_chart)
        basis: List[SectionMonomial] = []
        for summand, a in enumerate(self.degrees, start=1):
            for m in range(a + 1):
                exponent = m if base_chart == BASE_ZERO else a - m
                basis.append(SectionMonomial(summand=summand, exponent=exponent))
        return tuple(basis)

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.degrees) + ")"


class SectionMonomial(NamedTuple):
    """A basis section v_summand * u^exponent (v omitted on the chart summand)."""

    summand: int
    exponent: int


@dataclass(frozen=True)
class ScrollPoint:
    """A rational point in one chart of a scroll.

    base_chart is "0" or "inf" with u the base coordinate there;
    fiber_chart is the summand (1..n) whose homogeneous fiber coordinate is
    normalized to 1; v lists the remaining n-1 fiber coordinates, ordered
    by increasing summand index.
    """

    base_chart: str
    u: Fraction
    fiber_chart: int = 1
    v: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        if self.base_chart not in _BASE_CHARTS:
            raise ValueError(f"base chart must be one of {_BASE_CHARTS}")
        object.__setattr__(self, "u", Fraction(self.u))
        if not isinstance(self.fiber_chart, int) or self.fiber_chart < 1:
            raise ValueError("fiber chart must be a positive summand index")
        object.__setattr__(self, "v", tuple(Fraction(x) for x in self.v))


def _check_chart(scroll: DecomposableScroll, base_chart: str, fiber_chart: int) -> None:
    if base_chart not in _BASE_CHARTS:
        raise ValueError(f"base chart must be one of {_BASE_CHARTS}")
    if not 1 <= fiber_chart <= scroll.n:
        raise ValueError(
            f"fiber chart {fiber_chart} invalid for a {scroll.n}-dimensional scroll"
        )


def _check_point(scroll: DecomposableScroll, point: ScrollPoint) -> None:
    _check_chart(scroll, point.base_chart, point.fiber_chart)
    if len(point.v) != scroll.n - 1:
        raise ValueError(
            f"point carries {len(point.v)} fiber coordinates, expected {scroll.n - 1}"
        )


def fiber_coordinate(
    scroll: DecomposableScroll, point: ScrollPoint, summand: int
) -> Fraction:
    """Chart value of the fiber coordinate of a summand (1 on the chart summand)."""
    _check_point(scroll, point)
    if not 1 <= summand <= scroll.n:
        raise ValueError(f"summand index {summand} outside 1..{scroll.n}")
    if summand == point.fiber_chart:
        return Fraction(1)
    slot = summand - 1 if summand < point.fiber_chart else summand - 2
    return point.v[slot]


def to_other_base_chart(scroll: DecomposableScroll, point: ScrollPoint) -> ScrollPoint:
    """The same geometric point, expressed in the other base chart.

    Needs u != 0 (the point must lie over the chart overlap).  The fiber
    coordinates pick up the twist u^(a_iota - a_j) of the summands.
    """
    _check_point(scroll, point)
    if point.u == 0:
        raise ValueError("the point lies outside the other base chart")
    a_iota = scroll.degree_of(point.fiber_chart)
    others = [j for j in range(1, scroll.n + 1) if j != point.fiber_chart]
    new_v = tuple(
        fiber_coordinate(scroll, point, j) * point.u ** (a_iota - scroll.degree_of(j))
        for j in others
    )
    new_base = BASE_INF if point.base_chart == BASE_ZERO else BASE_ZERO
    return ScrollPoint(new_base, 1 / point.u, point.fiber_chart, new_v)


def to_fiber_chart(
    scroll: DecomposableScroll, point: ScrollPoint, fiber_chart: int
) -> ScrollPoint:
    """The same geometric point, normalized on another fiber summand."""
    _check_point(scroll, point)
    if not 1 <= fiber_chart <= scroll.n:
        raise ValueError(f"summand index {fiber_chart} outside 1..{scroll.n}")
    if fiber_chart == point.fiber_chart:
        return point
    pivot = fiber_coordinate(scroll, point, fiber_chart)
    if pivot == 0:
        raise ValueError(
            f"fiber coordinate {fiber_chart} vanishes; the point misses that chart"
        )
    others = [j for j in range(1, scroll.n + 1) if j != fiber_chart]
    new_v = tuple(fiber_coordinate(scroll, point, j) / pivot for j in others)
    return ScrollPoint(point.base_chart, point.u, fiber_chart, new_v)


# Column descriptors for the reduced jet matrix: ("u", h) is the pure
# derivative d^h/du^h, ("uv", h, j) is d^h/du^h d/dv_j.
Column = Tuple


def jet_columns(n: int, k: int, fiber_chart: int) -> Tuple[Column, ...]:
    """The kn+1 reduced derivative columns, graded by total order."""
    cols: List[Column] = [("u", 0)]
    others = [j for j in range(1, n + 1) if j != fiber_chart]
    for h in range(1, k + 1):
        cols.append(("u", h))
        for j in others:
            cols.append(("uv", h - 1, j))
    return tuple(cols)


def _upow(u: Fraction, e: int) -> Fraction:
    return u**e if e else Fraction(1)


@dataclass(frozen=True)
class JetMatrix:
    """Exact matrix of reduced k-jets of the section basis at a point.

    Rows follow the section basis order (summands ascending, exponents
    ascending); columns follow :func:`jet_columns`.
    """

    scroll: DecomposableScroll
    k: int
    point: ScrollPoint
    columns: Tuple[Column, ...]
    entries: Tuple[Tuple[Fraction, ...], ...]

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.columns)


def jet_matrix(scroll: DecomposableScroll, k: int, point: ScrollPoint) -> JetMatrix:
    """Evaluate all reduced partials of the section basis at the point.

    A section u^m has pure derivative perm(m, h) * u^(m-h); a section
    v_j u^m additionally has the mixed d/dv_j derivatives with the same
    falling-factorial coefficients.  Everything else vanishes identically.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError("jet order k must be a positive integer")
    _check_point(scroll, point)
    basis = scroll.section_basis(point.base_chart, point.fiber_chart)
    cols = jet_columns(scroll.n, k, point.fiber_chart)
    u = point.u
    rows: List[Tuple[Fraction, ...]] = []
    for section in basis:
        vfac = fiber_coordinate(scroll, point, section.summand)
        e = section.exponent
        row: List[Fraction] = []
        for col in cols:
            if col[0] == "u":
                h = col[1]
                value = vfac * perm(e, h) * _upow(u, e - h) if h <= e else Fraction(0)
            else:
                _, h, j = col
                if j == section.summand and h <= e:
                    value = perm(e, h) * _upow(u, e - h)
                else:
                    value = Fraction(0)
            row.append(Fraction(value))
        rows.append(tuple(row))
    return JetMatrix(scroll=scroll, k=k, point=point, columns=cols, entries=tuple(rows))


def _bareiss_rank(rows: List[List[int]]) -> int:
    """Rank by one-step fraction-free (Bareiss) elimination over the integers.

    Pivoting is deterministic: first nonzero entry in column order.  All
    divisions are exact.
    """
    if not rows:
        return 0
    nrows, ncols = len(rows), len(rows[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, nrows):
            if rows[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        if pivot_row != rank:
            rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        for r in range(rank + 1, nrows):
            factor = rows[r][col]
            for c in range(col + 1, ncols):
                rows[r][c] = (pivot * rows[r][c] - factor * rows[rank][c]) // prev
            rows[r][col] = 0
        prev = pivot
        rank += 1
        if rank == nrows:
            break
    return rank


def exact_rank(rows: Sequence[Sequence[Rational]]) -> int:
    """Exact rank of a rational matrix (rows are scaled integral first)."""
    cleared: List[List[int]] = []
    for row in rows:
        fracs = [Fraction(x) for x in row]
        scale = lcm(*(f.denominator for f in fracs)) if fracs else 1
        cleared.append([int(f * scale) for f in fracs])
    return _bareiss_rank(cleared)


def jet_rank(matrix: JetMatrix) -> int:
    """Exact rank of a jet matrix."""
    return exact_rank(matrix.entries)


def osculating_dim(scroll: DecomposableScroll, k: int, point: ScrollPoint) -> int:
    """Dimension of the k-th osculating space at the point: jet rank - 1."""
    return jet_rank(jet_matrix(scroll, k, point)) - 1


def is_inflected(scroll: DecomposableScroll, k: int, point: ScrollPoint) -> bool:
    """Whether the k-jet rank at the point drops below the generic bound kn+1.

    Only meaningful while kn does not exceed the ambient dimension N.
    """
    if k * scroll.n > scroll.N:
        raise ValueError(
            f"jet order {k} exceeds the range kn <= N for scroll {scroll} (N={scroll.N})"
        )
    return jet_rank(jet_matrix(scroll, k, point)) < k * scroll.n + 1
