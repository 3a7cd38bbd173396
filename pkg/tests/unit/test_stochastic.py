from typing import TYPE_CHECKING
from unittest import TestCase

import numpy as np

from tetrabridge.adapter.stochastic import TetraStochasticMatrixProtocol
from tetrabridge.api.channel.qubit import TetraQubitChannel
from tetrabridge.api.exceptions import (
    TetraNotColumnStochasticError,
    TetraNotDoublyStochasticError,
)
from tetrabridge.api.stochastic import (
    TetraStochasticMatrix,
    depolarizing,
    from_affine,
    normal_form,
    normal_is_stochastic,
    normal_matrix,
    random_doubly_stochastic,
    spectrum,
    step,
    to_affine,
    to_configuration,
    to_e_basis,
    validate,
)
from tetrabridge.api.tetra import prob_to_bloch
from tetrabridge.numkernel.rotation import is_rotation

if TYPE_CHECKING:
    from ..env import load_rng, random_stochastic
else:
    from env import load_rng, random_stochastic


class ValidateTests(TestCase):
    def test_identity(self):
        q = validate(np.eye(4))

        self.assertTrue(q.is_stochastic)
        self.assertTrue(q.is_doubly_stochastic)
        self.assertTrue(q.is_symmetric)

    def test_negative_entry_located(self):
        m = np.eye(4)
        m[0, 1], m[1, 1] = -0.1, 1.1
        q = validate(m)

        self.assertFalse(q.is_stochastic)
        self.assertEqual(q.min_entry_index, (0, 1))
        self.assertAlmostEqual(q.min_entry, -0.1)

    def test_column_sum(self):
        q = validate(np.full((4, 4), 0.3))

        self.assertFalse(q.is_stochastic)
        self.assertAlmostEqual(q.column_deviation, 0.2)

    def test_column_but_not_row(self):
        m = np.zeros((4, 4))
        m[0] = 1
        q = validate(m)

        self.assertTrue(q.is_stochastic)
        self.assertFalse(q.is_doubly_stochastic)

    def test_mixin_protocol(self):
        q = TetraStochasticMatrix(np.eye(4))

        self.assertTrue(isinstance(q, TetraStochasticMatrixProtocol))
        self.assertTrue(isinstance(q.channel(), TetraQubitChannel))
        self.assertTrue(np.allclose(q.affine().lambda_mat, np.eye(3)))


class BasisTests(TestCase):
    def test_round_trip(self):
        m = random_stochastic(load_rng(20))
        self.assertTrue(np.allclose(to_configuration(to_e_basis(m)), m, atol=1e-14))

    def test_e0_row_of_stochastic(self):
        # ⟨e_0|Q = ⟨e_0| ⇔ 열의 합이 1
        e = to_e_basis(random_stochastic(load_rng(21)))
        self.assertTrue(np.allclose(e[0], [1, 0, 0, 0], atol=1e-15))


class AffineTests(TestCase):
    def test_identity(self):
        affine = to_affine(np.eye(4))

        self.assertTrue(np.allclose(affine.t, 0))
        self.assertTrue(np.allclose(affine.lambda_mat, np.eye(3)))

    def test_action_matches_markov_step(self):
        rng = load_rng(22)

        for _ in range(100):
            q = random_stochastic(rng)
            p = rng.dirichlet(np.ones(4))
            affine = to_affine(q)

            self.assertTrue(np.allclose(affine.apply(prob_to_bloch(p)).r, prob_to_bloch(q @ p).r, atol=1e-12))
            self.assertTrue(np.allclose(from_affine(affine.t, affine.lambda_mat), q, atol=1e-14))

    def test_not_column_stochastic(self):
        with self.assertRaises(TetraNotColumnStochasticError):
            to_affine(np.full((4, 4), 0.3))


class NormalMatrixTests(TestCase):
    def test_entries(self):
        qn = normal_matrix([0.5, 0, 0])

        self.assertEqual(sorted(set(np.round(qn.reshape(-1), 12))), [0.125, 0.375])
        self.assertEqual(int(np.sum(np.isclose(qn, 0.375))), 8)

    def test_identity(self):
        self.assertTrue(np.allclose(normal_matrix([1, 1, 1]), np.eye(4)))

    def test_theorem_examples(self):
        self.assertTrue(normal_is_stochastic([1, 1, 1]))
        self.assertTrue(normal_is_stochastic([-1 / 3, -1 / 3, -1 / 3]))
        self.assertFalse(normal_is_stochastic([1, 1, -1]))

    def test_theorem_equivalence(self):
        rng = load_rng(23)

        for lambdas in rng.uniform(-1.5, 1.5, size=(10_000, 3)):
            entrywise = bool(normal_matrix(lambdas).min() >= -1e-9 / 4)
            self.assertEqual(normal_is_stochastic(lambdas, 1e-9), entrywise)

    def test_depolarizing(self):
        q = depolarizing(0.3)

        self.assertTrue(q.is_doubly_stochastic)
        self.assertTrue(np.allclose(q.q, normal_matrix([0.3, 0.3, 0.3])))


class NormalFormTests(TestCase):
    def test_already_normal(self):
        nf = normal_form(normal_matrix([0.5, 0.3, 0.1]))

        self.assertTrue(np.allclose(nf.lambdas, [0.5, 0.3, 0.1]))
        self.assertTrue(np.allclose(nf.s_hat @ nf.t_hat, np.eye(3)))
        self.assertTrue(np.allclose(nf.reconstruct(), normal_matrix([0.5, 0.3, 0.1])))

    def test_depolarizing(self):
        self.assertTrue(np.allclose(normal_form(depolarizing(0.5)).lambdas, [0.5, 0.5, 0.5]))

    def test_random(self):
        rng = load_rng(24)

        for _ in range(200):
            q = random_doubly_stochastic(rng)
            nf = normal_form(q)

            self.assertTrue(is_rotation(nf.s_hat, 1e-10)[0])
            self.assertTrue(is_rotation(nf.t_hat, 1e-10)[0])
            self.assertLessEqual(np.linalg.norm(nf.reconstruct() - q.q), 1e-10)
            self.assertTrue(nf.membership.inside)
            self.assertTrue(nf.is_product_stochastic)

    def test_not_doubly(self):
        with self.assertRaises(TetraNotDoublyStochasticError):
            normal_form(random_stochastic(load_rng(25)))


class MarkovTests(TestCase):
    def test_depolarizing_step(self):
        trajectory = step(depolarizing(0.5), [1, 0, 0, 0], 1)

        self.assertEqual(len(trajectory), 2)
        self.assertTrue(np.allclose(trajectory[1].p, [0.625, 0.125, 0.125, 0.125]))

    def test_zero_steps(self):
        self.assertEqual(len(step(np.eye(4), [0.25] * 4, 0)), 1)

    def test_normal_form_iterates(self):
        lambdas = np.array([0.5, -0.2, 0.1])
        p = np.array([0.4, 0.3, 0.2, 0.1])
        r = prob_to_bloch(p).r
        trajectory = step(normal_matrix(lambdas), p, 5)

        self.assertTrue(np.allclose(trajectory[5].bloch.r, lambdas**5 * r, atol=1e-14))

    def test_negative_steps(self):
        with self.assertRaises(ValueError):
            step(np.eye(4), [1, 0, 0, 0], -1)

    def test_not_stochastic(self):
        with self.assertRaises(TetraNotColumnStochasticError):
            step(normal_matrix([1, 1, -1]), [1, 0, 0, 0], 1)

    def test_spectrum(self):
        eigenvalues = spectrum(normal_matrix([0.5, -0.2, 0.1]))
        self.assertTrue(np.allclose(np.sort(eigenvalues.real), [-0.2, 0.1, 0.5, 1.0]))


class SamplerTests(TestCase):
    def test_doubly_stochastic(self):
        rng = load_rng(26)

        for _ in range(100):
            q = random_doubly_stochastic(rng)

            self.assertTrue(q.is_doubly_stochastic)
            self.assertTrue(q.is_symmetric)

    def test_deterministic(self):
        self.assertTrue(np.array_equal(random_doubly_stochastic(7).q, random_doubly_stochastic(7).q))
