import random
from fractions import Fraction

import pytest

from scrolljets.scrollmodel import (
    BASE_INF,
    BASE_ZERO,
    DecomposableScroll,
    ScrollPoint,
    exact_rank,
    fiber_coordinate,
    is_inflected,
    jet_columns,
    jet_matrix,
    jet_rank,
    osculating_dim,
    to_fiber_chart,
    to_other_base_chart,
)


def pt(u, v=(), fiber_chart=1, base_chart=BASE_ZERO):
    return ScrollPoint(base_chart, Fraction(u), fiber_chart, tuple(Fraction(x) for x in v))


def random_point(rng, scroll, allow_zero=True):
    base = rng.choice((BASE_ZERO, BASE_INF))
    iota = rng.randint(1, scroll.n)
    u = Fraction(rng.randint(-8, 8), rng.randint(1, 3))
    v = tuple(
        Fraction(rng.randint(-8, 8) if allow_zero else rng.randint(1, 8), rng.randint(1, 3))
        for _ in range(scroll.n - 1)
    )
    return ScrollPoint(base, u, iota, v)


# ---------------------------------------------------------------------------
# scroll construction
# ---------------------------------------------------------------------------


def test_scroll_examples():
    X = DecomposableScroll((2, 2))
    assert (X.n, X.d, X.N) == (2, 4, 5)
    X = DecomposableScroll((1, 2))
    assert (X.n, X.d, X.N) == (2, 3, 4)
    X = DecomposableScroll((1, 3))
    assert (X.n, X.d, X.N) == (2, 4, 5)


def test_scroll_rejects_bad_degrees():
    with pytest.raises(ValueError):
        DecomposableScroll(())
    with pytest.raises(ValueError):
        DecomposableScroll((2, 0))
    with pytest.raises(ValueError):
        DecomposableScroll((-1,))


def test_scroll_from_text():
    assert DecomposableScroll.from_text("1,2").degrees == (1, 2)
    with pytest.raises(ValueError):
        DecomposableScroll.from_text("1,x")


def test_section_basis_size_and_reversal():
    X = DecomposableScroll((1, 2))
    basis0 = X.section_basis(BASE_ZERO, 1)
    assert len(basis0) == X.N + 1
    assert [(s.summand, s.exponent) for s in basis0] == [
        (1, 0),
        (1, 1),
        (2, 0),
        (2, 1),
        (2, 2),
    ]
    basis_inf = X.section_basis(BASE_INF, 1)
    assert [(s.summand, s.exponent) for s in basis_inf] == [
        (1, 1),
        (1, 0),
        (2, 2),
        (2, 1),
        (2, 0),
    ]


# ---------------------------------------------------------------------------
# jet matrix
# ---------------------------------------------------------------------------


def test_jet_columns_shape_and_order():
    cols = jet_columns(2, 2, 1)
    assert cols == (("u", 0), ("u", 1), ("uv", 0, 2), ("u", 2), ("uv", 1, 2))
    for n in (1, 2, 3):
        for k in (1, 2, 3):
            assert len(jet_columns(n, k, 1)) == k * n + 1


def test_jet_matrix_explicit_five_by_five():
    X = DecomposableScroll((1, 2))
    u, v = Fraction(3, 2), Fraction(-4, 3)
    m = jet_matrix(X, 2, pt(u, (v,)))
    expected = [
        [1, 0, 0, 0, 0],
        [u, 1, 0, 0, 0],
        [v, 0, 1, 0, 0],
        [v * u, v, u, 0, 1],
        [v * u**2, 2 * u * v, u**2, 2 * v, 2 * u],
    ]
    assert [list(row) for row in m.entries] == expected


def test_jet_matrix_balanced_shape():
    for n, k in ((2, 2), (3, 2), (2, 3)):
        X = DecomposableScroll((k,) * n)
        p = pt(1, (1,) * (n - 1))
        m = jet_matrix(X, k, p)
        assert m.nrows == X.N + 1 == k * n + n
        assert m.ncols == k * n + 1


def test_jet_matrix_curve_is_derivative_vandermonde():
    X = DecomposableScroll((4,))
    u = Fraction(2)
    m = jet_matrix(X, 3, pt(u))
    assert m.nrows == 5 and m.ncols == 4
    from math import perm

    for row, e in zip(m.entries, range(5)):
        for col, h in zip(row, range(4)):
            assert col == (perm(e, h) * u ** (e - h) if h <= e else 0)


def test_jet_matrix_rejects_bad_input():
    X = DecomposableScroll((1, 2))
    with pytest.raises(ValueError):
        jet_matrix(X, 0, pt(1, (1,)))
    with pytest.raises(ValueError):
        jet_matrix(X, 2, pt(1, (1,), fiber_chart=3))
    with pytest.raises(ValueError):
        jet_matrix(X, 2, pt(1, ()))


# ---------------------------------------------------------------------------
# exact rank
# ---------------------------------------------------------------------------


def test_exact_rank_basics():
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert exact_rank([[Fraction(1, 2), 0], [0, Fraction(1, 3)]]) == 2
    assert exact_rank([[0, 0], [0, 0]]) == 0
    assert exact_rank([]) == 0


def test_exact_rank_matches_float_free_reference():
    # compare against sympy's rank on random small rational matrices
    import sympy as sp

    rng = random.Random(11)
    for _ in range(30):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        entries = [
            [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(cols)]
            for _ in range(rows)
        ]
        reference = sp.Matrix(
            [[sp.Rational(x.numerator, x.denominator) for x in row] for row in entries]
        ).rank()
        assert exact_rank(entries) == reference


def test_jet_rank_balanced_everywhere_full():
    X = DecomposableScroll((2, 2))
    rng = random.Random(3)
    for _ in range(25):
        p = random_point(rng, X)
        assert jet_rank(jet_matrix(X, 2, p)) == 5


def test_jet_rank_unbalanced_directrix_drop():
    X = DecomposableScroll((1, 3))
    assert jet_rank(jet_matrix(X, 2, pt(2, (0,)))) == 4
    assert jet_rank(jet_matrix(X, 2, pt(2, (5,)))) == 5
    assert jet_rank(jet_matrix(X, 2, pt(0, (0,), base_chart=BASE_INF))) == 4


# ---------------------------------------------------------------------------
# osculating dimension and inflection predicate
# ---------------------------------------------------------------------------


def test_osculating_dim_examples():
    assert osculating_dim(DecomposableScroll((2, 2)), 2, pt(3, (2,))) == 4
    assert osculating_dim(DecomposableScroll((1, 3)), 2, pt(1, (0,))) == 3
    X = DecomposableScroll((3,))
    for u in (0, 1, -2, Fraction(1, 3)):
        assert osculating_dim(X, 3, pt(u)) == 3


def test_osculating_dim_bound():
    rng = random.Random(5)
    for degrees in ((1, 2), (1, 3), (2, 2), (1, 1, 2), (2, 2, 2)):
        X = DecomposableScroll(degrees)
        k = X.N // X.n
        for _ in range(10):
            p = random_point(rng, X)
            assert osculating_dim(X, k, p) <= k * X.n


def test_is_inflected_examples():
    balanced = DecomposableScroll((2, 2))
    rng = random.Random(9)
    for _ in range(10):
        assert not is_inflected(balanced, 2, random_point(rng, balanced))
    X = DecomposableScroll((1, 2))
    assert is_inflected(X, 2, pt(4, (0,)))
    assert not is_inflected(X, 2, pt(4, (Fraction(1, 2),)))


def test_is_inflected_rejects_large_order():
    X = DecomposableScroll((1, 2))
    with pytest.raises(ValueError):
        is_inflected(X, 3, pt(1, (1,)))


def test_rank_bound_invariant():
    rng = random.Random(13)
    for degrees in ((2,), (4,), (1, 2), (2, 3), (1, 1, 2), (3, 3)):
        X = DecomposableScroll(degrees)
        for k in range(1, X.N // X.n + 1):
            for _ in range(5):
                p = random_point(rng, X)
                rank = jet_rank(jet_matrix(X, k, p))
                assert rank <= min(k * X.n + 1, X.N + 1)


def test_first_jets_have_immersion_rank():
    rng = random.Random(17)
    for degrees in ((1, 2), (1, 3), (2, 2, 2), (5,)):
        X = DecomposableScroll(degrees)
        for _ in range(10):
            p = random_point(rng, X)
            assert jet_rank(jet_matrix(X, 1, p)) == X.n + 1


def test_rank_monotonic_in_jet_order():
    rng = random.Random(19)
    for degrees in ((1, 3), (2, 3), (1, 1, 2)):
        X = DecomposableScroll(degrees)
        kmax = X.N // X.n
        for _ in range(8):
            p = random_point(rng, X)
            ranks = [jet_rank(jet_matrix(X, k, p)) for k in range(1, kmax + 1)]
            assert ranks == sorted(ranks)


# ---------------------------------------------------------------------------
# chart transitions
# ---------------------------------------------------------------------------


def test_base_chart_transition_roundtrip():
    X = DecomposableScroll((1, 3))
    p = pt(Fraction(3, 2), (Fraction(5),))
    q = to_other_base_chart(X, p)
    assert q.base_chart == BASE_INF and q.u == Fraction(2, 3)
    assert to_other_base_chart(X, q) == p
    with pytest.raises(ValueError):
        to_other_base_chart(X, pt(0, (1,)))


def test_fiber_chart_transition_roundtrip():
    X = DecomposableScroll((1, 1, 2))
    p = pt(2, (Fraction(3), Fraction(-5)))
    q = to_fiber_chart(X, p, 3)
    assert q.fiber_chart == 3
    assert fiber_coordinate(X, q, 1) == Fraction(-1, 5)
    assert to_fiber_chart(X, q, 1) == p
    with pytest.raises(ValueError):
        to_fiber_chart(X, pt(2, (0, 1)), 2)


def test_rank_is_chart_independent():
    rng = random.Random(23)
    for degrees in ((1, 2), (1, 3), (2, 3), (1, 1, 2)):
        X = DecomposableScroll(degrees)
        k = X.N // X.n
        for _ in range(8):
            p = random_point(rng, X, allow_zero=False)
            if p.u == 0:
                continue
            rank = jet_rank(jet_matrix(X, k, p))
            assert jet_rank(jet_matrix(X, k, to_other_base_chart(X, p))) == rank
            for iota in range(1, X.n + 1):
                q = to_fiber_chart(X, p, iota)
                assert jet_rank(jet_matrix(X, k, q)) == rank
