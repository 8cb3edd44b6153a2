import numpy as np
import pytest

from qeei import (QMatrix, conj_transpose, from_components, identity, matmul,
                  minor, natural_submatrix, real_lift, scale_right,
                  validate_hermitian, zeros)
from qeei.errors import (DimensionMismatch, IndexOutOfRange, NotHermitian,
                         NotSquare)
from qeei.qmatrix import from_real_lift, natural_orders
from qeei.quat import I, J, K, Quaternion
from qeei.random_matrices import random_hermitian, random_qmatrix

from conftest import U


def test_from_components_example(example_matrix):
    A0 = [[3, 0], [0, 2]]
    A1 = [[0, 1], [-1, 0]]
    A2 = [[0, -1], [1, 0]]
    A3 = [[0, 1], [-1, 0]]
    assert from_components(A0, A1, A2, A3) == example_matrix


def test_from_components_zero_and_real():
    z = np.zeros((2, 2))
    assert from_components(z, z, z, z) == zeros(2)
    r = np.array([[1.0, 2.0], [3.0, 4.0]])
    A = from_components(r, z, z, z)
    assert A[1, 0] == Quaternion(3.0)


def test_from_components_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        from_components(np.zeros((2, 2)), np.zeros((2, 3)),
                        np.zeros((2, 2)), np.zeros((2, 2)))


def test_validate_hermitian(example_matrix):
    validate_hermitian(example_matrix)
    with pytest.raises(NotHermitian):
        validate_hermitian(QMatrix([[0, I], [I, 0]]))
    validate_hermitian(QMatrix([[1, 0], [0, -2]]))
    with pytest.raises(NotSquare):
        validate_hermitian(QMatrix([[1, 0]]))
    # complex diagonal is not allowed either
    with pytest.raises(NotHermitian):
        validate_hermitian(QMatrix([[I]]))


def test_minor(example_hermitian):
    assert minor(example_hermitian, 1).inner == QMatrix([[2]])
    assert minor(example_hermitian, 2).inner == QMatrix([[3]])
    E3 = validate_hermitian(identity(3))
    for j in (1, 2, 3):
        assert minor(E3, j).inner == identity(2)
    with pytest.raises(IndexOutOfRange):
        minor(example_hermitian, 3)


def test_minor_stays_hermitian():
    rng = np.random.default_rng(0)
    H = random_hermitian(4, rng)
    for j in range(1, 5):
        validate_hermitian(minor(H, j).inner)


def test_natural_submatrix_2x2(example_hermitian):
    lam1 = (5 + np.sqrt(13)) / 2
    shifted = QMatrix([[lam1 - 3, -U], [-U.conj(), lam1 - 2]])
    # (i=1, j=2) keeps only the (2,1) entry
    assert natural_submatrix(shifted, 1, 2) == QMatrix([[U]])
    for i, j in ((1, 1), (2, 2), (2, 1)):
        sub = natural_submatrix(shifted, i, j)
        assert sub.shape == (1, 1)


def test_natural_orders_moves_j_and_i_to_front():
    assert natural_orders(5, 3, 5) == ([5, 1, 2, 4], [3, 1, 2, 4])
    assert natural_orders(5, 1, 1) == ([2, 3, 4, 5], [2, 3, 4, 5])
    assert natural_orders(4, 2, 1) == ([1, 3, 4], [2, 3, 4])


def test_real_lift_scalar_units():
    assert np.array_equal(real_lift(QMatrix([[1]])), np.eye(4))
    expected = np.array([[0, 1, 0, 0],
                         [-1, 0, 0, 0],
                         [0, 0, 0, -1],
                         [0, 0, 1, 0]], dtype=float)
    assert np.array_equal(real_lift(QMatrix([[I]])), expected)


def test_real_lift_homomorphism(example_matrix):
    A2 = matmul(example_matrix, example_matrix)
    assert np.allclose(real_lift(example_matrix) @ real_lift(example_matrix),
                       real_lift(A2), atol=1e-10)


def test_real_lift_homomorphism_random():
    rng = np.random.default_rng(1)
    for _ in range(10):
        A = random_qmatrix(3, 3, rng)
        B = random_qmatrix(3, 3, rng)
        assert np.max(np.abs(real_lift(A) @ real_lift(B)
                             - real_lift(matmul(A, B)))) < 1e-10
        assert np.allclose(real_lift(A) + real_lift(B),
                           real_lift(A + B), atol=1e-12)


def test_real_lift_of_hermitian_is_symmetric():
    rng = np.random.default_rng(2)
    H = random_hermitian(3, rng)
    L = real_lift(H.inner)
    assert np.max(np.abs(L - L.T)) < 1e-12


def test_from_real_lift_round_trip():
    rng = np.random.default_rng(3)
    A = random_qmatrix(3, 3, rng)
    assert from_real_lift(real_lift(A)).isclose(A, 1e-14)


def test_matmul_identity(example_matrix):
    assert matmul(identity(2), example_matrix) == example_matrix
    with pytest.raises(DimensionMismatch):
        matmul(example_matrix, QMatrix([[1, 2, 3]]))


def test_conj_transpose(example_matrix):
    assert conj_transpose(example_matrix) == example_matrix
    rng = np.random.default_rng(4)
    A = random_qmatrix(3, 2, rng)
    assert conj_transpose(conj_transpose(A)) == A


def test_scale_right_order_matters():
    assert scale_right(QMatrix([[I]]), J) == QMatrix([[K]])
    assert scale_right(QMatrix([[J]]), I) == QMatrix([[-K]])
