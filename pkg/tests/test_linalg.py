"""Vectors, matrices, and the shared matrix text format."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ecomath import linalg
from ecomath.linalg import DimensionError, FormatError, Matrix, Vector


def vec(*entries):
    return Vector(tuple(float(v) for v in entries))


class TestVector:
    def test_min_dimension(self):
        with pytest.raises(DimensionError):
            Vector(())

    def test_double_transpose(self):
        v = vec(1, 2, 3)
        assert v.T.T == v
        assert v.T.orientation == "row"


class TestMatrix:
    def test_entry_count_enforced(self):
        with pytest.raises(DimensionError):
            Matrix(2, 2, (1.0, 2.0, 3.0))

    def test_double_transpose(self):
        A = Matrix.from_rows([[1, 2, 3], [4, 5, 6]])
        assert A.T.T == A

    def test_identity(self):
        assert Matrix.identity(3).to_array().tolist() == np.eye(3).tolist()


class TestLinearCombination:
    def test_addition(self):
        assert linalg.linear_combination([1, 1], [vec(1, 2), vec(3, 4)]) == vec(4, 6)

    def test_zero_rescaling(self):
        assert linalg.linear_combination([0], [vec(5, 7)]) == vec(0, 0)

    def test_canonical_basis_expansion(self):
        assert linalg.linear_combination([2, -1], [vec(1, 0), vec(0, 1)]) == vec(2, -1)

    def test_empty_terms_rejected(self):
        with pytest.raises(ValueError):
            linalg.linear_combination([], [])

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            linalg.linear_combination([1, 1], [vec(1, 2), vec(1, 2, 3)])


class TestDotNormAngle:
    def test_unit_vector(self):
        assert linalg.dot(vec(1, 0), vec(1, 0)) == 1.0

    def test_direct_summation(self):
        assert linalg.dot(vec(1, 2), vec(3, 4)) == 11.0

    def test_orthogonality_flag(self):
        assert linalg.dot(vec(1, 0), vec(0, 1)) == 0.0
        assert linalg.are_orthogonal(vec(1, 0), vec(0, 1))

    def test_norm_345(self):
        assert linalg.norm(vec(3, 4)) == 5.0

    def test_norm_zero(self):
        assert linalg.norm(vec(0, 0)) == 0.0

    def test_norm_homogeneous(self):
        assert linalg.norm(vec(-2, 0)) == 2.0

    def test_angle_orthogonal(self):
        assert linalg.angle(vec(1, 0), vec(0, 1)) == pytest.approx(math.pi / 2)

    def test_angle_parallel(self):
        assert linalg.angle(vec(2, 0), vec(5, 0)) == pytest.approx(0.0)

    def test_angle_45_degrees(self):
        assert linalg.angle(vec(1, 0), vec(1, 1)) == pytest.approx(math.pi / 4)

    def test_angle_zero_vector_rejected(self):
        with pytest.raises(ValueError):
            linalg.angle(vec(0, 0), vec(1, 0))


class TestMatrixOps:
    def test_addition_identity(self):
        A = Matrix.from_rows([[1, 2], [3, 4]])
        Z = Matrix.zeros(2, 2)
        assert linalg.mat_combine(1, A, 1, Z) == A

    def test_pure_rescaling(self):
        A = Matrix.from_rows([[1, 2], [3, 4]])
        out = linalg.mat_combine(2, A, 0, A)
        assert out == Matrix.from_rows([[2, 4], [6, 8]])

    def test_entrywise_sum(self):
        out = linalg.mat_combine(1, Matrix.from_rows([[1, 0]]), 1, Matrix.from_rows([[0, 1]]))
        assert out == Matrix.from_rows([[1, 1]])

    def test_format_mismatch(self):
        with pytest.raises(DimensionError):
            linalg.mat_combine(1, Matrix.zeros(2, 2), 1, Matrix.zeros(2, 3))

    def test_identity_column(self):
        out = linalg.mat_mul(Matrix.identity(2), Matrix.from_rows([[5], [7]]))
        assert out == Matrix.from_rows([[5], [7]])

    def test_column_extraction(self):
        out = linalg.mat_mul(
            Matrix.from_rows([[1, 2], [3, 4]]), Matrix.from_rows([[0], [1]])
        )
        assert out == Matrix.from_rows([[2], [4]])

    def test_zero_divisor(self):
        N = Matrix.from_rows([[0, 1], [0, 0]])
        assert linalg.mat_mul(N, N) == Matrix.zeros(2, 2)

    def test_inner_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            linalg.mat_mul(Matrix.zeros(2, 3), Matrix.zeros(2, 3))


rng = np.random.default_rng(20260823)


class TestAlgebraicProperties:
    def test_associativity(self):
        for _ in range(20):
            A, B, C = (Matrix.from_array(rng.normal(size=(3, 3))) for _ in range(3))
            lhs = linalg.mat_mul(A, linalg.mat_mul(B, C)).to_array()
            rhs = linalg.mat_mul(linalg.mat_mul(A, B), C).to_array()
            assert np.max(np.abs(lhs - rhs)) <= 1e-9

    def test_transpose_of_product(self):
        for _ in range(20):
            A = Matrix.from_array(rng.integers(-9, 10, size=(3, 4)).astype(float))
            B = Matrix.from_array(rng.integers(-9, 10, size=(4, 2)).astype(float))
            lhs = linalg.mat_mul(A, B).T.to_array()
            rhs = linalg.mat_mul(B.T, A.T).to_array()
            assert np.array_equal(lhs, rhs)

    def test_linearity_of_matrix_maps(self):
        for _ in range(20):
            A = Matrix.from_array(rng.normal(size=(3, 3)))
            x1, x2 = rng.normal(size=3), rng.normal(size=3)
            lam = float(rng.normal())
            Ax = lambda v: linalg.mat_vec(A, Vector(tuple(v))).to_array()
            assert np.max(np.abs(Ax(x1 + x2) - (Ax(x1) + Ax(x2)))) <= 1e-9
            assert np.max(np.abs(Ax(lam * x1) - lam * Ax(x1))) <= 1e-9

    @given(
        st.lists(st.floats(-1e6, 1e6), min_size=3, max_size=3),
        st.lists(st.floats(-1e6, 1e6), min_size=3, max_size=3),
    )
    @settings(max_examples=100)
    def test_triangle_inequality(self, a, b):
        va, vb = Vector(tuple(a)), Vector(tuple(b))
        s = linalg.linear_combination([1, 1], [va, vb])
        assert linalg.norm(s) <= linalg.norm(va) + linalg.norm(vb) + 1e-6

    def test_cosine_always_clamped(self):
        # nearly parallel vectors can push the raw cosine past 1
        a = vec(1, 1e-16)
        b = vec(1, 0)
        assert 0.0 <= linalg.angle(a, b) <= math.pi


class TestMatrixTextFormat:
    def test_round_trip(self, tmp_path):
        A = Matrix.from_rows([[1.5, -2.25], [0, 4]])
        path = tmp_path / "m.txt"
        linalg.write_matrix(path, A)
        assert linalg.read_matrix(path) == A

    def test_comments_and_blank_lines_ignored(self):
        text = "# header\n\n1, 2\n# mid comment\n3, 4\n"
        assert linalg.parse_matrix_text(text) == Matrix.from_rows([[1, 2], [3, 4]])

    def test_ragged_rows_rejected(self):
        with pytest.raises(FormatError):
            linalg.parse_matrix_text("1,2\n3\n")

    def test_bad_number_rejected(self):
        with pytest.raises(FormatError):
            linalg.parse_matrix_text("1,two\n")

    def test_vector_round_trip(self):
        v = vec(1, 2.5, -3)
        assert linalg.parse_vector_text(linalg.format_vector_text(v)) == v
