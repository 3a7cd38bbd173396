from typing import TYPE_CHECKING
from unittest import TestCase

import numpy as np

from tetrabridge.numkernel.eigen import general_eig, hermitian_eig
from tetrabridge.numkernel.exceptions import (
    TetraDimensionError,
    TetraNotHermitianError,
    TetraOverflowError,
)
from tetrabridge.numkernel.expm import mat_exp
from tetrabridge.numkernel.rotation import (
    is_rotation,
    quaternion_from_rotation,
    random_rotation,
    rotation_from_quaternion,
)
from tetrabridge.numkernel.svd import svd3_rotations
from tetrabridge.numkernel.vectorize import (
    gamma_involution,
    partial_trace_input,
    partial_trace_output,
    unvec,
    vec,
)

if TYPE_CHECKING:
    from ..env import load_rng, random_hermitian
else:
    from env import load_rng, random_hermitian

SIGMA_Z = np.diag([1.0, -1.0])


class HermitianEigTests(TestCase):
    def test_identity(self):
        self.assertTrue(np.allclose(hermitian_eig(np.eye(4)).eigenvalues, np.ones(4)))

    def test_pauli_z(self):
        self.assertTrue(np.allclose(hermitian_eig(SIGMA_Z).eigenvalues, [1, -1]))

    def test_zz_projector(self):
        m = (np.eye(4) + np.kron(SIGMA_Z, SIGMA_Z)) / 4
        self.assertTrue(np.allclose(hermitian_eig(m).eigenvalues, [0.5, 0.5, 0, 0], atol=1e-14))

    def test_random_reconstruction(self):
        rng = load_rng()

        for n in (2, 4, 9):
            for _ in range(20):
                m = random_hermitian(rng, n)
                eig = hermitian_eig(m)
                norm = np.linalg.norm(m)

                self.assertLessEqual(np.linalg.norm(eig.reconstruct() - m), 1e-10 * norm)
                self.assertLessEqual(np.linalg.norm(eig.eigenvectors.conj().T @ eig.eigenvectors - np.eye(n)), 1e-10)
                self.assertTrue(np.all(np.diff(eig.eigenvalues) <= 0))
                self.assertTrue(np.allclose(eig.eigenvalues, np.sort(np.linalg.eigvalsh(m))[::-1], atol=1e-10))

    def test_zero_matrix(self):
        self.assertTrue(np.array_equal(hermitian_eig(np.zeros((3, 3))).eigenvalues, np.zeros(3)))

    def test_not_hermitian(self):
        with self.assertRaises(TetraNotHermitianError):
            hermitian_eig([[0, 1], [0, 0]])

    def test_not_square(self):
        with self.assertRaises(TetraDimensionError):
            hermitian_eig(np.zeros((2, 3)))


class GeneralEigTests(TestCase):
    def test_sorted_descending(self):
        eig = general_eig(np.diag([0.2, 1.0, -0.5]))
        self.assertTrue(np.allclose(eig.eigenvalues, [1.0, 0.2, -0.5]))

    def test_rotation_pair(self):
        eig = general_eig([[0, -1], [1, 0]])
        self.assertTrue(np.allclose(eig.eigenvalues, [1j, -1j]))

    def test_conjugate_pair_with_rounding_noise(self):
        rng = load_rng(9)

        for _ in range(50):
            r = random_rotation(rng)
            m = r @ np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]]) @ r.T
            eig = general_eig(m)

            self.assertTrue(np.allclose(eig.eigenvalues, [1, 1j, -1j], atol=1e-10))


class Svd3Tests(TestCase):
    def test_identity(self):
        s_hat, lambdas, t_hat = svd3_rotations(np.eye(3))

        self.assertTrue(np.allclose(s_hat, np.eye(3)))
        self.assertTrue(np.allclose(lambdas, [1, 1, 1]))
        self.assertTrue(np.allclose(t_hat, np.eye(3)))

    def test_reflection_absorbed(self):
        m = np.diag([2.0, 1.0, -3.0])
        result = svd3_rotations(m)

        self.assertTrue(np.allclose(np.abs(result.lambdas), [3, 2, 1]))
        self.assertTrue(is_rotation(result.s_hat)[0])
        self.assertTrue(is_rotation(result.t_hat)[0])
        self.assertLessEqual(np.linalg.norm(result.reconstruct() - m), 1e-10)

    def test_random(self):
        rng = load_rng(1)

        for _ in range(1000):
            m = rng.uniform(-2, 2, size=(3, 3))
            result = svd3_rotations(m)

            self.assertTrue(is_rotation(result.s_hat, 1e-10)[0])
            self.assertTrue(is_rotation(result.t_hat, 1e-10)[0])
            self.assertLessEqual(np.linalg.norm(result.reconstruct() - m), 1e-10)
            self.assertTrue(np.all(np.diff(np.abs(result.lambdas)) <= 1e-12))
            self.assertAlmostEqual(np.prod(result.lambdas), np.linalg.det(m), places=10)

    def test_rank_deficient(self):
        m = np.outer([1.0, 2.0, 0.5], [0.3, -1.0, 2.0])
        result = svd3_rotations(m)

        self.assertTrue(is_rotation(result.s_hat)[0])
        self.assertLessEqual(np.linalg.norm(result.reconstruct() - m), 1e-10)
        self.assertAlmostEqual(result.lambdas[1], 0, places=10)


class MatExpTests(TestCase):
    def test_zero(self):
        self.assertTrue(np.array_equal(mat_exp(np.zeros((4, 4))), np.eye(4)))

    def test_diagonal(self):
        self.assertTrue(np.allclose(mat_exp(np.diag([1.0, -2.0, 0.5])), np.diag(np.exp([1.0, -2.0, 0.5])), rtol=1e-13))

    def test_symmetric_against_eigendecomposition(self):
        rng = load_rng(2)

        for _ in range(20):
            m = rng.normal(size=(4, 4)) * 3
            m = m + m.T
            w, v = np.linalg.eigh(m)
            expected = v @ np.diag(np.exp(w)) @ v.T

            self.assertLessEqual(np.linalg.norm(mat_exp(m) - expected), 1e-11 * np.linalg.norm(expected))

    def test_complex_rotation(self):
        theta = 0.7
        u = mat_exp(-1j * theta / 2 * np.array([[0, 1], [1, 0]]))
        expected = np.array([[np.cos(theta / 2), -1j * np.sin(theta / 2)], [-1j * np.sin(theta / 2), np.cos(theta / 2)]])

        self.assertTrue(np.allclose(u, expected, atol=1e-14))

    def test_nilpotent(self):
        self.assertTrue(np.allclose(mat_exp(np.array([[0.0, 1.0], [0.0, 0.0]])), [[1, 1], [0, 1]], rtol=0, atol=1e-15))

    def test_empty(self):
        self.assertEqual(mat_exp(np.zeros((0, 0))).shape, (0, 0))

    def test_inverse(self):
        rng = load_rng(10)

        for _ in range(100):
            m = rng.uniform(-1, 1, size=(4, 4)) * rng.uniform(0, 1)

            self.assertLessEqual(np.linalg.norm(mat_exp(m) @ mat_exp(-m) - np.eye(4)), 1e-10)

    def test_permutation_similarity(self):
        rng = load_rng(11)

        for _ in range(100):
            m = rng.normal(size=(4, 4)) * 2
            p = np.eye(4)[rng.permutation(4)]
            expected = p @ mat_exp(m) @ p.T

            self.assertLessEqual(np.linalg.norm(mat_exp(p @ m @ p.T) - expected), 1e-12 * np.linalg.norm(expected))

    def test_overflow(self):
        with self.assertRaises(TetraOverflowError):
            mat_exp(np.eye(2) * 1e7)


class VectorizeTests(TestCase):
    def test_row_major(self):
        self.assertTrue(np.array_equal(vec([[1, 2], [3, 4]]), [1, 2, 3, 4]))
        self.assertTrue(np.array_equal(unvec([1, 2, 3, 4]), [[1, 2], [3, 4]]))

    def test_conjugation_superop(self):
        rng = load_rng(3)
        x, y, rho = (rng.normal(size=(2, 2)) for _ in range(3))

        self.assertTrue(np.allclose(np.kron(x, y.T) @ vec(rho), vec(x @ rho @ y)))

    def test_gamma_involution(self):
        rng = load_rng(4)
        m = rng.normal(size=(9, 9)) + 1j * rng.normal(size=(9, 9))

        self.assertTrue(np.array_equal(gamma_involution(gamma_involution(m)), m))

    def test_gamma_of_identity(self):
        # 항등 사상의 L^Γ 는 2|ω⟩⟨ω|
        w = np.eye(2).reshape(-1)
        self.assertTrue(np.array_equal(gamma_involution(np.eye(4)), np.outer(w, w)))

    def test_partial_traces(self):
        a = np.array([[0.7, 0.1], [0.1, 0.3]])
        b = np.array([[0.4, 0.2j], [-0.2j, 0.6]])
        ab = np.kron(a, b)

        self.assertTrue(np.allclose(partial_trace_output(ab), b))
        self.assertTrue(np.allclose(partial_trace_input(ab), a))

    def test_not_square_dimension(self):
        with self.assertRaises(TetraDimensionError):
            unvec(np.zeros(5))


class RotationTests(TestCase):
    def test_quaternion_round_trip(self):
        rng = load_rng(5)

        for _ in range(200):
            r = random_rotation(rng)
            self.assertTrue(is_rotation(r, 1e-12)[0])
            self.assertTrue(np.allclose(rotation_from_quaternion(quaternion_from_rotation(r)), r, atol=1e-12))

    def test_half_turn(self):
        q = quaternion_from_rotation(np.diag([-1.0, -1.0, 1.0]))
        self.assertTrue(np.allclose(q, [0, 0, 0, 1]))

    def test_reflection_rejected(self):
        ok, determinant, _ = is_rotation(np.diag([1.0, 1.0, -1.0]))

        self.assertFalse(ok)
        self.assertAlmostEqual(determinant, -1)
