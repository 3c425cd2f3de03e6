import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import P
from interlacing.errors import DimensionMismatch, RangeMismatch, WindowExceedsTruncation
from interlacing.harness import random_series_matrix
from interlacing.interlace import hurwitz_combination
from interlacing.series import Series, mul, veronese_section
from interlacing.tp import det_exact
from interlacing.windows import (SeriesMatrix, WindowSpec, flip_rat_window,
                                 flip_series_matrix, flip_window_spec, hurwitz_window,
                                 lace_entry, lace_product_windows, lace_window,
                                 series_matrix_product, toeplitz_window, veronese_matrix,
                                 veronese_matrix_flip)


def tagged(tag, n=6):
    """Polynomial whose coefficient n is ``tag + n``, so entries name their source."""
    return Series.poly([tag + k for k in range(n)])


A, B, C, D = tagged(10), tagged(20), tagged(30), tagged(40)


def rows_of(M):
    return [list(r) for r in M.data]


def test_toeplitz_examples():
    assert rows_of(toeplitz_window(P(1, 3, 2), WindowSpec.square(3))) == \
        [[1, 3, 2], [0, 1, 3], [0, 0, 1]]
    assert rows_of(toeplitz_window(P(1, 1, 1), WindowSpec(0, 2, 1, 3))) == \
        [[1, 1, 0], [1, 1, 1], [0, 1, 1]]
    assert rows_of(toeplitz_window(P(5, 6, 7), WindowSpec(0, 1, -2, -1))) == [[0, 0], [0, 0]]


def test_hurwitz_examples():
    assert rows_of(hurwitz_window(P(1, 2, 1), WindowSpec.square(2))) == [[1, 1], [0, 2]]
    # entry (u, v) is c_{2v-u}: only (1, 1) reads c_1
    assert rows_of(hurwitz_window(P(0, 1), WindowSpec(0, 2, 0, 1))) == [[0, 0], [0, 1], [0, 0]]


def test_hurwitz_interleaves_toeplitz():
    a, b = tagged(10, 5), tagged(20, 5)
    Cx = hurwitz_combination(a, b)
    H = hurwitz_window(Cx, WindowSpec(0, 7, 0, 3))
    Tb = toeplitz_window(b, WindowSpec(0, 3, 0, 3))
    # odd rows lag by one column: row 2i+1 reads a_{v-i-1}
    Ta = toeplitz_window(a, WindowSpec(0, 3, -1, 2))
    assert [rows_of(H)[2 * i] for i in range(4)] == rows_of(Tb)
    assert [rows_of(H)[2 * i + 1] for i in range(4)] == rows_of(Ta)


def test_lace_entry_examples():
    M = SeriesMatrix(((A, C), (B, D)))
    assert lace_entry(M, 0, 1) == 30       # c_0
    assert lace_entry(M, 1, 2) == 21       # b_1
    assert lace_entry(M, 2, 2) == 10       # a_0
    assert divmod(-1, 2) == (-1, 1)
    assert lace_entry(M, -1, 0) == 21      # u' = -1, i = 1 -> b_1
    T = toeplitz_window(A, WindowSpec(-3, 3, -3, 3))
    L = lace_window(SeriesMatrix(((A,),)), WindowSpec(-3, 3, -3, 3))
    assert T == L


def test_lace_two_by_one_display():
    # rows -1..3, cols -1..2: b-row, then 0 a-row, then 0 b-row, ...
    M = lace_window(SeriesMatrix.column([A, B]), WindowSpec(-1, 3, -1, 2))
    assert rows_of(M) == [[20, 21, 22, 23],
                          [0, 10, 11, 12],
                          [0, 20, 21, 22],
                          [0, 0, 10, 11],
                          [0, 0, 20, 21]]


def test_lace_three_by_one_display():
    M = lace_window(SeriesMatrix.column([A, B, C]), WindowSpec(-1, 3, -1, 3))
    assert rows_of(M) == [[30, 31, 32, 33, 34],
                          [0, 10, 11, 12, 13],
                          [0, 20, 21, 22, 23],
                          [0, 30, 31, 32, 33],
                          [0, 0, 10, 11, 12]]


def test_lace_two_by_two_display():
    M = lace_window(SeriesMatrix(((A, C), (B, D))), WindowSpec(0, 4, 0, 4))
    assert rows_of(M) == [[10, 30, 11, 31, 12],
                          [20, 40, 21, 41, 22],
                          [0, 0, 10, 30, 11],
                          [0, 0, 20, 40, 21],
                          [0, 0, 0, 0, 10]]


def test_linear_forms_display():
    a, b, c, d = 2, 3, 5, 7
    M = SeriesMatrix(((P(a, 1), P(c, 1)), (P(b, 1), P(d, 1))))
    assert rows_of(lace_window(M, WindowSpec(0, 2, 0, 4))) == \
        [[a, c, 1, 1, 0], [b, d, 1, 1, 0], [0, 0, a, c, 1]]


@given(st.integers(0, 10 ** 6))
def test_shift_invariance_and_block_form(seed):
    rng = random.Random(seed)
    p, q = rng.randint(1, 3), rng.randint(1, 3)
    M = random_series_matrix(rng, p, q, 3)
    for _ in range(20):
        u, v = rng.randint(-8, 8), rng.randint(-8, 8)
        assert lace_entry(M, u + p, v + q) == lace_entry(M, u, v)
    u1, v1 = rng.randint(-3, 3), rng.randint(-3, 3)
    block = lace_window(M, WindowSpec(p * u1, p * u1 + p - 1, q * v1, q * v1 + q - 1))
    n = v1 - u1
    expected = [[M[i, j].coeffs[n] if 0 <= n <= M[i, j].trunc else 0 for j in range(q)]
                for i in range(p)]
    assert rows_of(block) == expected


def test_window_validation_is_eager():
    geo = Series.truncated([1] * 4)
    toeplitz_window(geo, WindowSpec(0, 3, 0, 3))
    with pytest.raises(WindowExceedsTruncation):
        toeplitz_window(geo, WindowSpec(0, 3, 0, 4))
    with pytest.raises(WindowExceedsTruncation):
        hurwitz_window(geo, WindowSpec(0, 1, 0, 2))
    # exact entries never run out
    toeplitz_window(P(1, 1), WindowSpec(0, 50, 0, 50))


def test_flip_series_matrix():
    M = SeriesMatrix(((A, C), (B, D)))
    F = flip_series_matrix(M)
    assert F.entries == ((D, C), (B, A))
    one = SeriesMatrix(((A,),))
    assert flip_series_matrix(one) == one
    R = SeriesMatrix(((A, B, C),))
    assert flip_series_matrix(R).entries == ((C,), (B,), (A,))
    assert flip_series_matrix(flip_series_matrix(R)) == R


def test_flip_rat_window():
    M = toeplitz_window(A, WindowSpec(-1, -1, -1, -1))
    F = flip_rat_window(M)
    assert (F.row_lo, F.col_lo, F[0, 0]) == (0, 0, 10)
    W = toeplitz_window(A, WindowSpec(-2, 1, -1, 3))
    assert flip_rat_window(flip_rat_window(W)) == W
    sq = lace_window(SeriesMatrix(((A, C), (B, D))), WindowSpec(0, 3, 1, 4))
    assert det_exact(flip_rat_window(sq)) == det_exact(sq)
    with pytest.raises(RangeMismatch):
        flip_rat_window(W, WindowSpec(0, 4, 0, 3))
    assert flip_rat_window(W, flip_window_spec(WindowSpec(-2, 1, -1, 3))).rows == 5


@given(st.integers(0, 10 ** 6))
def test_flip_identity_entrywise(seed):
    rng = random.Random(seed)
    M = random_series_matrix(rng, rng.randint(1, 3), rng.randint(1, 3), 4)
    w = WindowSpec(-4, 5, -3, 6)
    lhs = lace_window(flip_series_matrix(M), flip_window_spec(w))
    assert lhs == flip_rat_window(lace_window(M, w))


def test_product_examples():
    one = SeriesMatrix(((A,),))
    assert series_matrix_product(one, SeriesMatrix(((B,),)))[0, 0] == mul(A, B)
    M = SeriesMatrix(((A, C), (B, D)))
    I = SeriesMatrix.constant([[1, 0], [0, 1]])
    assert series_matrix_product(I, M) == M
    row = SeriesMatrix.constant([[1, 1]])
    assert series_matrix_product(row, SeriesMatrix.column([A, B]))[0, 0] == A + B
    with pytest.raises(DimensionMismatch):
        series_matrix_product(M, SeriesMatrix.column([A, B, C]))


def test_product_truncation_is_min():
    L = SeriesMatrix(((Series.truncated([1, 2, 3]), A),))
    R = SeriesMatrix.column([B, Series.truncated([1] * 6)])
    prod = series_matrix_product(L, R)
    assert prod.trunc == 2 and not prod.exact


@given(st.integers(0, 10 ** 6))
def test_product_windows_multiply(seed):
    rng = random.Random(seed)
    p, t, q = (rng.randint(1, 3) for _ in range(3))
    X, Y = random_series_matrix(rng, p, t, 3), random_series_matrix(rng, t, q, 3)
    w = WindowSpec(-2, 4, -1, 5)
    left, right = lace_product_windows(X, Y, w)
    assert left @ right == lace_window(series_matrix_product(X, Y), w)


def test_veronese_matrix_examples():
    a, b = P(1, 1) ** 4, P(1, 2, 3, 4)
    row = SeriesMatrix.row([a, b])
    assert veronese_matrix(row, 1) == row == veronese_matrix_flip(row, 1)
    S = veronese_matrix(row, 2)
    assert S.entries == ((veronese_section(a, 2, 0), veronese_section(b, 2, 0),
                          veronese_section(a, 2, 1), veronese_section(b, 2, 1)),)
    F = veronese_matrix_flip(row, 2)
    assert F.entries == ((veronese_section(a, 2, 1), veronese_section(b, 2, 1)),
                         (veronese_section(a, 2, 0), veronese_section(b, 2, 0)))


def test_window_json():
    w = WindowSpec(0, 9, -1, 3)
    assert WindowSpec.from_json(w.to_json()) == w
    M = SeriesMatrix(((A, C), (B, D)))
    assert SeriesMatrix.from_json(M.to_json()) == M
    with pytest.raises(DimensionMismatch):
        SeriesMatrix.from_json(dict(M.to_json(), p=3))
    with pytest.raises(DimensionMismatch):
        SeriesMatrix(((A, B), (C,)))
