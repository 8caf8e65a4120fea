"""Exact sparse linear algebra: fields, RREF, kernels, solving."""

import fractions

import pytest
from hypothesis import given, settings, strategies as st

from linsyz.linalg import (GF, QQ, Mat, Subspace, intersect, kernel,
                           left_kernel, rank, rref, solve, subspace_sum)

F = GF(101)


def matmul(a, x):
    """Plain dict-based product for cross-checking solve()."""
    rows = []
    for r in a.rows:
        out = {}
        for i, c in r.items():
            for j, v in x.rows[i].items():
                s = a.field(out.get(j, a.field.zero) + a.field.mul(c, v))
                if s:
                    out[j] = s
                else:
                    out.pop(j, None)
        rows.append(out)
    return Mat(a.nrows, x.ncols, rows, a.field)


def test_prime_field_arithmetic():
    assert F(103) == 2
    assert F.mul(F(50), F.inv(F(50))) == F.one
    assert F.lift(F(100)) == -1
    with pytest.raises(ValueError):
        GF(100)


def test_rationals():
    half = QQ(fractions.Fraction(1, 2))
    assert QQ.mul(half, QQ(2)) == QQ.one
    assert QQ.inv(QQ(-3)) == fractions.Fraction(-1, 3)


def dense(rows, field=F):
    return Mat.from_dense([[field(v) for v in r] for r in rows], field)


def test_rref_canonical():
    m = dense([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    r = rref(m)
    assert r.nrows == 2
    # pivots normalized to 1, pivot columns cleared everywhere else
    assert r.rows[0][0] == 1 and 1 not in r.rows[0]
    assert rref(r) == r


def test_rank_left_kernel():
    m = dense([[1, 2], [2, 4], [1, 0]])
    assert rank(m) == 2
    lk = left_kernel(m)
    assert lk.nrows == 1
    # kernel combination annihilates the rows
    combo = lk.rows[0]
    out = {}
    for i, c in combo.items():
        for j, v in m.rows[i].items():
            out[j] = F(out.get(j, 0) + F.mul(c, v))
    assert all(v == 0 for v in out.values())


def test_solve_unique_and_underdetermined():
    a = dense([[1, 0], [0, 1], [1, 1]])
    b = dense([[2], [3], [5]])
    res = solve(a, b)
    assert res.ok and res.unique
    assert matmul(a, res.solutions) == b
    # inconsistent target
    b2 = dense([[2], [3], [6]])
    res2 = solve(a, b2)
    assert not res2.ok and res2.inconsistent == [0]
    # underdetermined: free variable pinned to zero
    a3 = dense([[1, 1]])
    res3 = solve(a3, dense([[7]]))
    assert res3.ok and not res3.unique
    assert matmul(a3, res3.solutions) == dense([[7]])


def test_subspace_membership_and_coords():
    s = Subspace.from_rows([{0: F(1), 2: F(1)}, {1: F(1)}], 3, F)
    assert s.dim == 2
    assert s.contains({0: F(2), 1: F(5), 2: F(2)})
    assert not s.contains({0: F.one})
    coords = s.coords({0: F(2), 1: F(5), 2: F(2)})
    assert coords == {0: F(2), 1: F(5)}
    assert s.coords({2: F.one}) is None


def test_sum_intersection_dimension_formula():
    a = Subspace.from_rows([{0: F.one}, {1: F.one}], 4, F)
    b = Subspace.from_rows([{1: F.one}, {2: F.one}], 4, F)
    i = intersect(a, b)
    s = subspace_sum(a, b)
    assert i.dim == 1 and s.dim == 3
    assert i.dim + s.dim == a.dim + b.dim
    assert i.contains({1: F.one})


entries = st.integers(min_value=-6, max_value=6)


@st.composite
def small_matrix(draw):
    nr = draw(st.integers(1, 5))
    nc = draw(st.integers(1, 5))
    data = draw(st.lists(st.lists(entries, min_size=nc, max_size=nc),
                         min_size=nr, max_size=nr))
    return dense(data)


@settings(max_examples=60, deadline=None)
@given(small_matrix())
def test_rank_nullity_property(m):
    assert rank(m) + kernel(m).dim == m.ncols
    assert rank(m) == rank(m.transpose())


@settings(max_examples=60, deadline=None)
@given(small_matrix())
def test_rref_idempotent_property(m):
    r = rref(m)
    assert rref(r) == r
    assert r.nrows == rank(m)


@settings(max_examples=40, deadline=None)
@given(small_matrix())
def test_kernel_annihilates(m):
    k = kernel(m)
    # kernel vectors satisfy M . v = 0
    for v in k.basis.rows:
        for r in m.rows:
            acc = F.zero
            for j, c in r.items():
                acc = F(acc + F.mul(c, v.get(j, F.zero)))
            assert acc == F.zero


def test_intersect_coordinate_fast_path_matches_general():
    a = Subspace.from_rows([{0: F.one}, {1: F.one}, {2: F.one}], 5, F)
    b = Subspace.from_rows([{0: F(1), 3: F(2)}, {1: F(1), 2: F(1)}], 5, F)
    got = intersect(a, b)
    swapped = intersect(b, a)
    assert got.basis == swapped.basis
    assert got.dim == 1
    assert got.contains({1: F.one, 2: F.one})
