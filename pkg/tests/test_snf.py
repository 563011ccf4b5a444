"""Integer Smith and Hermite normal forms."""

from itertools import combinations
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graded_leibniz import smith_normal_form, row_hnf
from graded_leibniz.snf import det_int, diagonal_of, int_matrix_inverse, int_mat_mul

entries = st.integers(min_value=-9, max_value=9)


def matrices(max_side=5):
    return st.integers(min_value=1, max_value=max_side).flatmap(
        lambda m: st.integers(min_value=1, max_value=max_side).flatmap(
            lambda n: st.lists(
                st.lists(entries, min_size=n, max_size=n), min_size=m, max_size=m
            )
        )
    )


def minor_gcd(mat, k):
    """gcd of all k x k minors, computed straight from the definition."""
    m, n = len(mat), len(mat[0])
    g = 0
    for rows in combinations(range(m), k):
        for cols in combinations(range(n), k):
            sub = [[mat[i][j] for j in cols] for i in rows]
            g = gcd(g, det_int(sub))
    return g


def test_det_known_values():
    assert det_int([[2]]) == 2
    assert det_int([[1, 2], [3, 4]]) == -2
    assert det_int([[0, 1], [1, 0]]) == -1
    assert det_int([[1, 2, 3], [4, 5, 6], [7, 8, 9]]) == 0


@given(matrices(4))
@settings(max_examples=150)
def test_det_multiplicative_on_squares(rows):
    n = min(len(rows), len(rows[0]))
    a = [row[:n] for row in rows[:n]]
    b = [row[::-1][:n] for row in rows[:n]]
    assert det_int(int_mat_mul(a, b)) == det_int(a) * det_int(b)


@given(matrices(5))
@settings(max_examples=200)
def test_snf_transform_identity(mat):
    u, d, v = smith_normal_form(mat)
    assert int_mat_mul(int_mat_mul(u, mat), v) == d
    assert det_int(u) in (1, -1)
    assert det_int(v) in (1, -1)
    m, n = len(mat), len(mat[0])
    for i in range(m):
        for j in range(n):
            if i != j:
                assert d[i][j] == 0
    diag = diagonal_of(d)
    seen_zero = False
    for x in diag:
        assert x >= 0
        if x == 0:
            seen_zero = True
        else:
            assert not seen_zero  # nonzero entries precede zeros
    for a, b in zip(diag, diag[1:]):
        if a and b:
            assert b % a == 0


@given(matrices(4))
@settings(max_examples=100)
def test_snf_matches_determinantal_divisors(mat):
    _, d, _ = smith_normal_form(mat)
    diag = diagonal_of(d)
    prev = 1
    for k in range(1, min(len(mat), len(mat[0])) + 1):
        dk = minor_gcd(mat, k)
        expect = 0 if dk == 0 else dk // prev
        assert diag[k - 1] == expect
        if dk == 0:
            break
        prev = dk


def test_snf_known_examples():
    # entries gcd 2, |det| 8 -> invariant factors 2, 4
    _, d, _ = smith_normal_form([[2, 4], [6, 8]])
    assert diagonal_of(d) == [2, 4]
    # entries gcd 2, 2x2-minors gcd 4, |det| 624 -> 2, 2, 156
    _, d, _ = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    assert diagonal_of(d) == [2, 2, 156]
    _, d, _ = smith_normal_form([[0, 0], [0, 0]])
    assert diagonal_of(d) == [0, 0]


@given(matrices(5))
@settings(max_examples=200)
def test_row_hnf_properties(mat):
    h, u = row_hnf(mat)
    assert det_int(u) in (1, -1)
    assert int_mat_mul(u, mat) == h
    pivots = []
    for r, row in enumerate(h):
        nz = next((j for j, x in enumerate(row) if x), None)
        if nz is None:
            continue
        assert not pivots or nz > pivots[-1][1]  # staircase
        assert row[nz] > 0
        pivots.append((r, nz))
    for r, c in pivots:
        for above, _ in pivots:
            if above < r:
                assert 0 <= h[above][c] < h[r][c]
    # zero rows sink to the bottom
    zrows = [not any(row) for row in h]
    assert zrows == sorted(zrows)


@given(matrices(4))
@settings(max_examples=100)
def test_row_hnf_is_row_lattice_invariant(mat):
    h1, _ = row_hnf(mat)
    # permuting rows and adding one to another keeps the lattice
    twisted = [row[:] for row in mat][::-1]
    if len(twisted) >= 2:
        twisted[0] = [x + 3 * y for x, y in zip(twisted[0], twisted[1])]
    h2, _ = row_hnf(twisted)
    assert h1 == h2


def test_int_matrix_inverse():
    u = [[1, 2], [0, 1]]
    assert int_matrix_inverse(u) == [[1, -2], [0, 1]]
    assert int_matrix_inverse([[2, 0], [0, 0]]) is None
    with pytest.raises(ValueError):
        int_matrix_inverse([[2, 0], [0, 1]])  # invertible over Q only


@given(matrices(4))
@settings(max_examples=100)
def test_unimodular_witnesses_invert_exactly(mat):
    u, _, v = smith_normal_form(mat)
    for w in (u, v):
        winv = int_matrix_inverse(w)
        n = len(w)
        assert int_mat_mul(w, winv) == [[int(i == j) for j in range(n)] for i in range(n)]
