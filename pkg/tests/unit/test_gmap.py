from typing import TYPE_CHECKING
from unittest import TestCase

import numpy as np

from tetrabridge.api.channel import map_to_channel
from tetrabridge.api.exceptions import (
    TetraBasisMismatchError,
    TetraConstraintViolationError,
    TetraUnsupportedDimensionError,
)
from tetrabridge.api.gmap import (
    build_channel,
    compose,
    orthonormal_basis,
    sic_basis,
    validate_basis,
)
from tetrabridge.numkernel.exceptions import TetraDimensionError

if TYPE_CHECKING:
    from ..env import load_rng, random_hermitian, random_stochastic
else:
    from env import load_rng, random_hermitian, random_stochastic


def random_density(rng: np.random.Generator, d: int) -> np.ndarray:
    m = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    rho = m @ m.conj().T
    return rho / np.trace(rho)


def random_permutation_mixture(rng: np.random.Generator, n: int, terms: int = 5) -> np.ndarray:
    weights = rng.dirichlet(np.ones(terms))
    return sum(w * np.eye(n)[rng.permutation(n)] for w in weights)


class SicBasisTests(TestCase):
    def test_qubit(self):
        basis = sic_basis(2)

        self.assertTrue(np.allclose(basis.g, (2 * np.eye(4) + 1) / 6))
        self.assertTrue(basis.positive)
        self.assertTrue(basis.g_stochastic)

    def test_qutrit(self):
        basis = sic_basis(3)
        overlaps = np.einsum("mij,nji->mn", basis.b, basis.b).real

        self.assertTrue(np.allclose(overlaps, (3 * np.eye(9) + 1) / 4))
        self.assertTrue(np.allclose(basis.g, overlaps / 3))
        self.assertTrue(np.allclose(basis.a.sum(axis=0), np.eye(3)))
        self.assertTrue(basis.positive)
        self.assertTrue(basis.g_stochastic)

    def test_unsupported(self):
        with self.assertRaises(TetraUnsupportedDimensionError):
            sic_basis(4)


class OrthonormalBasisTests(TestCase):
    def test_gram(self):
        basis = orthonormal_basis()

        self.assertTrue(np.allclose(basis.g, np.eye(4)))
        self.assertFalse(basis.positive)

    def test_matches_qubit_channel(self):
        rng = load_rng(60)
        q = random_stochastic(rng)

        self.assertTrue(np.allclose(build_channel(q, orthonormal_basis()).superop, map_to_channel(q).superop))

    def test_identity(self):
        channel = build_channel(np.eye(4), orthonormal_basis())
        self.assertTrue(np.allclose(channel.superop, np.eye(4)))


class ValidateBasisTests(TestCase):
    def test_sum_not_identity(self):
        projectors = sic_basis(2).b

        with self.assertRaises(TetraConstraintViolationError):
            validate_basis(projectors, projectors)

    def test_trace_not_one(self):
        basis = sic_basis(2)

        with self.assertRaises(TetraConstraintViolationError):
            validate_basis(basis.a, 2 * basis.b)

    def test_not_hermitian(self):
        basis = sic_basis(2)
        b = basis.b.copy()
        b[0, 0, 1] += 0.1

        with self.assertRaises(TetraConstraintViolationError):
            validate_basis(basis.a, b)

    def test_not_spanning(self):
        basis = sic_basis(2)
        b = np.stack([basis.b[0]] * 4)

        with self.assertRaises(TetraConstraintViolationError):
            validate_basis(basis.a, b)

    def test_wrong_count(self):
        with self.assertRaises(TetraDimensionError):
            validate_basis(np.stack([np.eye(2) / 3] * 3), np.stack([np.eye(2) / 2] * 3))


class ChannelTests(TestCase):
    def test_uniform(self):
        rng = load_rng(61)

        for d in (2, 3):
            channel = build_channel(np.full((d * d, d * d), 1 / (d * d)), sic_basis(d))

            for _ in range(5):
                self.assertTrue(np.allclose(channel(random_density(rng, d)), np.eye(d) / d))

    def test_random_cptp(self):
        rng = load_rng(62)

        for d in (2, 3):
            basis = sic_basis(d)

            for _ in range(1_000):
                channel = build_channel(random_stochastic(rng, d * d), basis)

                self.assertTrue(channel.completely_positive)
                self.assertTrue(channel.trace_preserving)

    def test_unital(self):
        rng = load_rng(63)

        for d in (2, 3):
            channel = build_channel(random_permutation_mixture(rng, d * d), sic_basis(d))
            self.assertTrue(channel.unital)

    def test_hermiticity_preserved(self):
        rng = load_rng(64)
        channel = build_channel(random_stochastic(rng, 9), sic_basis(3))
        out = channel(random_hermitian(rng, 3))

        self.assertTrue(np.allclose(out, out.conj().T))

    def test_wrong_shape(self):
        with self.assertRaises(TetraDimensionError):
            build_channel(np.eye(4), sic_basis(3))


class ComposeTests(TestCase):
    def test_homomorphism(self):
        rng = load_rng(65)

        for d in (2, 3):
            basis = sic_basis(d)

            for _ in range(100):
                first = build_channel(random_stochastic(rng, d * d), basis)
                second = build_channel(random_stochastic(rng, d * d), basis)
                composed, residual = compose(first, second)

                self.assertLessEqual(residual, 1e-12)
                self.assertTrue(np.allclose(composed.q, first.q @ basis.g @ second.q))
                self.assertTrue(composed.completely_positive)

    def test_mismatch(self):
        first = build_channel(np.eye(4), sic_basis(2))
        second = build_channel(np.eye(4), orthonormal_basis())

        with self.assertRaises(TetraBasisMismatchError):
            compose(first, second)
