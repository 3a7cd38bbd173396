from typing import TYPE_CHECKING
from unittest import TestCase

import numpy as np

from tetrabridge.api.channel import PAULIS, unitary_lift, unitary_superop
from tetrabridge.api.exceptions import (
    TetraColumnSumNotZeroError,
    TetraNotSymmetricError,
)
from tetrabridge.api.lindblad import (
    TetraGenerator,
    exp_consistency,
    gen_normal_form,
    generator_normal_matrix,
    is_classical_generator,
    lindblad_certify,
    map_generator,
    omega_perp,
    random_symmetric_generator,
    semigroup_check,
)
from tetrabridge.api.stochastic import depolarizing, embed_rotation, to_configuration
from tetrabridge.api.tetra.vertex import E_VECTORS
from tetrabridge.logging import logger
from tetrabridge.numkernel.rotation import is_rotation, random_rotation

if TYPE_CHECKING:
    from ..env import load_rng, random_hermitian
else:
    from env import load_rng, random_hermitian


def classical_h_vec(rng: np.random.Generator) -> np.ndarray:
    return np.linalg.solve(E_VECTORS[1:], rng.uniform(0, 1, size=3))


def rotated(h_vec, s_hat) -> np.ndarray:
    s_prime = to_configuration(embed_rotation(s_hat))
    h = s_prime @ generator_normal_matrix(h_vec) @ s_prime.T
    return (h + h.T) / 2


def transposition_generator() -> np.ndarray:
    h = np.zeros((4, 4))
    h[0, 1] = h[1, 0] = 1
    h[0, 0] = h[1, 1] = -1
    return h


class GeneratorTests(TestCase):
    def test_depolarizing_entries(self):
        hn = generator_normal_matrix([-1, -1, -1])

        self.assertTrue(np.allclose(np.diag(hn), -0.75))
        self.assertTrue(np.allclose(hn[~np.eye(4, dtype=bool)], 0.25))
        self.assertTrue(TetraGenerator(hn).is_classical_generator)

    def test_is_classical(self):
        self.assertTrue(is_classical_generator([0, 0, 0]))
        self.assertTrue(is_classical_generator([-1, -1, -1]))
        self.assertFalse(is_classical_generator([1, 0, 0]))
        self.assertFalse(is_classical_generator([-2, 1, 1]))

    def test_not_symmetric(self):
        h = np.zeros((4, 4))
        h[0, 1], h[1, 1] = 1, -1

        with self.assertRaises(TetraNotSymmetricError):
            TetraGenerator(h)

    def test_column_sum(self):
        with self.assertRaises(TetraColumnSumNotZeroError):
            TetraGenerator(np.eye(4))


class NormalFormTests(TestCase):
    def test_zero(self):
        self.assertTrue(np.allclose(gen_normal_form(np.zeros((4, 4))).h_vec, 0))

    def test_reconstruct(self):
        rng = load_rng(50)

        for _ in range(200):
            h = rotated(rng.uniform(-2, 2, size=3), random_rotation(rng))
            nf = gen_normal_form(h)

            self.assertTrue(is_rotation(nf.s_prime_hat, 1e-10)[0])
            self.assertLessEqual(float(np.max(np.abs(nf.reconstruct() - h))), 1e-10)

    def test_transposition_is_not_normal_classical(self):
        nf = gen_normal_form(transposition_generator())

        self.assertTrue(TetraGenerator(transposition_generator()).is_classical_generator)
        self.assertTrue(np.allclose(np.sort(nf.h_vec), [-2, 0, 0]))
        self.assertFalse(nf.is_classical)


class MapGeneratorTests(TestCase):
    def test_zero(self):
        self.assertTrue(np.allclose(map_generator(np.zeros((4, 4))), 0))

    def test_normal_action(self):
        rng = load_rng(51)
        h_vec = rng.uniform(-1, 1, size=3)
        l_superop = map_generator(generator_normal_matrix(h_vec))

        for _ in range(10):
            x = random_hermitian(rng, 2)
            expected = sum(h * np.trace(x @ s) * s for h, s in zip(h_vec, PAULIS)) / 2
            out = (l_superop @ x.reshape(-1)).reshape(2, 2)

            self.assertTrue(np.allclose(out, expected, atol=1e-12))

    def test_unitary_conjugation(self):
        rng = load_rng(52)

        for _ in range(100):
            h_vec, s_hat = rng.uniform(-2, 2, size=3), random_rotation(rng)
            u = unitary_lift(s_hat)
            expected = unitary_superop(u) @ map_generator(generator_normal_matrix(h_vec)) @ unitary_superop(u.conj().T)

            self.assertTrue(np.allclose(map_generator(rotated(h_vec, s_hat)), expected, atol=1e-12))


class CertifyTests(TestCase):
    def test_zero(self):
        certificate = lindblad_certify(np.zeros((4, 4)))

        self.assertTrue(certificate.certified)
        self.assertTrue(np.allclose(certificate.omega_perp_spectrum, 0))

    def test_depolarizing_generator(self):
        certificate = lindblad_certify(map_generator(generator_normal_matrix([-1, -1, -1])))

        self.assertTrue(certificate)
        self.assertTrue(np.allclose(certificate.omega_perp_spectrum, [0.5, 0.5, 0.5, 0]))

    def test_not_certified(self):
        certificate = lindblad_certify(map_generator(generator_normal_matrix([1, 0, 0])))

        self.assertFalse(certificate)
        self.assertTrue(certificate.hermitian_ok)
        self.assertTrue(certificate.dual_unital_ok)
        self.assertAlmostEqual(float(certificate.omega_perp_spectrum[-1]), -0.5)

    def test_trace_not_annihilated(self):
        certificate = lindblad_certify(np.eye(4))

        self.assertFalse(certificate.dual_unital_ok)
        self.assertFalse(certificate.certified)

    def test_classical_iff_certified(self):
        rng = load_rng(53)

        for h_vec in rng.uniform(-2, 2, size=(10_000, 3)):
            rates = E_VECTORS[1:] @ h_vec

            if float(np.min(np.abs(rates))) < 1e-8:
                continue

            certificate = lindblad_certify(map_generator(generator_normal_matrix(h_vec)))

            self.assertEqual(certificate.certified, is_classical_generator(h_vec))
            self.assertTrue(
                np.allclose(np.sort(certificate.omega_perp_spectrum), np.sort([0, *rates / 2]), atol=1e-10)
            )

    def test_conjugation_invariance(self):
        rng = load_rng(54)

        for _ in range(1_000):
            h_vec, s_hat = classical_h_vec(rng), random_rotation(rng)
            normal = lindblad_certify(map_generator(generator_normal_matrix(h_vec)))
            general = lindblad_certify(map_generator(rotated(h_vec, s_hat)))

            self.assertTrue(general.certified)
            self.assertTrue(np.allclose(general.omega_perp_spectrum, normal.omega_perp_spectrum, atol=1e-9))

    def test_omega_perp_commutes(self):
        rng = load_rng(55)
        projector = omega_perp(2)

        for _ in range(100):
            u = unitary_lift(random_rotation(rng))
            k = np.kron(u, u.conj())

            self.assertLessEqual(float(np.max(np.abs(projector @ k - k @ projector))), 1e-10)


class ExpConsistencyTests(TestCase):
    def test_zero_time(self):
        report = exp_consistency(generator_normal_matrix([-1, -1, -1]), 0.0)

        self.assertTrue(np.allclose(report.q, np.eye(4)))
        self.assertTrue(np.allclose(report.channel, np.eye(4)))
        self.assertTrue(report.certified)

    def test_depolarizing(self):
        report = exp_consistency(generator_normal_matrix([-1, -1, -1]), 1.0)

        self.assertTrue(np.allclose(report.q, depolarizing(np.exp(-1)).q, atol=1e-12))
        self.assertTrue(report.channel_cp)

    def test_random_generators(self):
        rng = load_rng(56)

        for _ in range(100):
            h = random_symmetric_generator(rng)

            for t in (0.1, 1.0, 5.0):
                report = exp_consistency(h, t)

                self.assertTrue(report.certified)
                self.assertLessEqual(report.deviation, 1e-8)
                self.assertTrue(report.q_stochastic)
                self.assertTrue(report.channel_cp)

    def test_uncertified_warns(self):
        with self.assertLogs(logger, "WARNING"):
            report = exp_consistency(transposition_generator(), 1.0)

        self.assertFalse(report.certified)
        self.assertTrue(report.q_stochastic)
        self.assertLessEqual(report.deviation, 1e-8)

    def test_negative_time(self):
        with self.assertRaises(ValueError):
            exp_consistency(np.zeros((4, 4)), -1.0)

    def test_semigroup(self):
        rng = load_rng(57)

        for _ in range(20):
            report = semigroup_check(random_symmetric_generator(rng), 0.3, 0.7)

            self.assertLessEqual(report.classical_deviation, 1e-9)
            self.assertLessEqual(report.quantum_deviation, 1e-9)


class SamplerTests(TestCase):
    def test_certified(self):
        rng = load_rng(58)

        for _ in range(50):
            h = random_symmetric_generator(rng)

            self.assertTrue(h.is_classical_generator)
            self.assertTrue(lindblad_certify(map_generator(h)).certified)

    def test_deterministic(self):
        self.assertTrue(np.array_equal(random_symmetric_generator(3).h, random_symmetric_generator(3).h))
