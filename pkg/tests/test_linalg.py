from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cubic27.linalg import (
    QMatrix,
    contains,
    full_space,
    intersect,
    kernel,
    rank,
    rref,
    span,
    zero_subspace,
)

entries = st.integers(-9, 9)


def matrix_lists(max_rows=8, max_cols=8):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(
            st.lists(entries, min_size=c, max_size=c), min_size=1, max_size=max_rows
        )
    )


def vector_lists(length, max_count=4):
    return st.lists(
        st.lists(entries, min_size=length, max_size=length),
        min_size=0,
        max_size=max_count,
    )


class TestRref:
    def test_proportional_rows(self):
        assert rref(QMatrix([[2, 4], [1, 2]])) == QMatrix([[1, 2], [0, 0]])

    def test_identity_fixed_point(self):
        ident = QMatrix.identity(3)
        assert rref(ident) == ident

    def test_leading_entries_are_one(self):
        r = rref(QMatrix([[0, 3, 6], [2, 4, 8]]))
        for row in r.data:
            lead = next((x for x in row if x != 0), None)
            assert lead in (None, 1)

    @given(matrix_lists())
    @settings(max_examples=60, deadline=None)
    def test_idempotent(self, rows):
        m = QMatrix(rows)
        assert rref(rref(m)) == rref(m)

    @given(matrix_lists())
    @settings(max_examples=60, deadline=None)
    def test_rank_equals_transpose_rank(self, rows):
        m = QMatrix(rows)
        assert rank(m) == rank(m.transpose())


class TestRankKernel:
    def test_zero_matrix_rank(self):
        assert rank(QMatrix.zeros(5, 5)) == 0

    def test_dependent_rows_rank(self):
        assert rank(QMatrix([[1, 2], [2, 4]])) == 1

    def test_identity_kernel_trivial(self):
        assert kernel(QMatrix.identity(4)).dim == 0

    def test_all_ones_row_kernel(self):
        assert kernel(QMatrix([[1] * 27])).dim == 26

    def test_kernel_vectors_annihilated(self):
        m = QMatrix([[1, 2, 3], [4, 5, 6]])
        ker = kernel(m)
        for v in ker.basis.data:
            assert m.apply(v) == (0, 0)

    @given(matrix_lists())
    @settings(max_examples=60, deadline=None)
    def test_rank_nullity(self, rows):
        m = QMatrix(rows)
        assert kernel(m).dim + rank(m) == m.ncols


class TestSubspaces:
    def test_span_two_vectors(self):
        assert span([[1, 0, 0], [1, 1, 0]]).dim == 2

    def test_span_collinear(self):
        assert span([[1, 2, 3], [2, 4, 6]]).dim == 1

    def test_empty_span_requires_ambient_dim(self):
        with pytest.raises(ValueError):
            span([])
        assert span([], ambient_dim=5).dim == 0

    def test_intersect_idempotent(self):
        s = span([[1, 0, 1], [0, 1, 0]])
        assert intersect(s, s) == s

    def test_intersect_with_full_space(self):
        s = span([[1, 2, 3, 4]])
        assert intersect(full_space(4), s) == s

    def test_intersect_dimension_mismatch(self):
        with pytest.raises(ValueError):
            intersect(full_space(3), full_space(4))

    def test_contains_zero_vector(self):
        assert contains(zero_subspace(3), [0, 0, 0])
        assert contains(span([[1, 1]]), [0, 0])

    def test_contains_difference_in_sum_zero(self):
        sum_zero = kernel(QMatrix([[1] * 5]))
        assert contains(sum_zero, [1, -1, 0, 0, 0])
        assert not contains(sum_zero, [1, 0, 0, 0, 0])

    def test_contains_length_mismatch(self):
        with pytest.raises(ValueError):
            contains(full_space(3), [1, 0])

    def test_canonical_equality(self):
        # same plane from two different spanning sets
        s1 = span([[1, 0, 1], [0, 1, 1]])
        s2 = span([[1, 1, 2], [1, -1, 0]])
        assert s1 == s2
        assert hash(s1) == hash(s2)

    @given(vector_lists(6), vector_lists(6))
    @settings(max_examples=60, deadline=None)
    def test_dimension_formula(self, rows1, rows2):
        u = span(rows1, ambient_dim=6)
        w = span(rows2, ambient_dim=6)
        assert intersect(u, w).dim + (u + w).dim == u.dim + w.dim

    @given(vector_lists(6), vector_lists(6))
    @settings(max_examples=40, deadline=None)
    def test_intersection_contained_in_both(self, rows1, rows2):
        u = span(rows1, ambient_dim=6)
        w = span(rows2, ambient_dim=6)
        meet = intersect(u, w)
        assert u.contains_subspace(meet)
        assert w.contains_subspace(meet)


def test_fixed_pipeline_is_deterministic():
    def pipeline():
        m = QMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
        k = kernel(m * m - m.scaled(Fraction(1, 2)))
        return (rref(m), k.basis, intersect(k, full_space(3)).basis)

    assert pipeline() == pipeline()
