import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.stats import unitary_group

from qpredict import divergence
from qpredict.divergence import (
    Alpha, ProbabilityVector, classical_alpha_divergence, fidelity,
    quantum_alpha_divergence, relative_entropy, trace_norm, trace_norm_distance
)
from qpredict.exceptions import (
    DimensionMismatch, InvalidAlpha, InvalidProbability, SupportMismatch
)
from qpredict.operators import (
    DensityOperator, maximally_mixed, mix, random_density, random_pure
)

ALPHAS = (-3.0, -1.0, -0.5, 0.0, 0.5, 1.0, 3.0)

KET_0 = DensityOperator(np.diag([1, 0]))
KET_PLUS = DensityOperator(np.full((2, 2), 0.5))


def random_pairs(rng, count):
    for k in range(count):
        dim = 2 + k % 3
        yield random_density(dim, rng), random_density(dim, rng)


def test_alpha():
    assert Alpha(1).is_plus_one and not Alpha(1).is_minus_one
    assert Alpha(-1.0).is_minus_one
    assert not Alpha(0.999999).is_limit

    assert Alpha(0.5).rho_exponent == 0.25
    assert Alpha(0.5).sigma_exponent == 0.75
    assert Alpha(0).prefactor == 4

    for value in (float('nan'), float('inf'), 'x', None):
        with pytest.raises(InvalidAlpha):
            Alpha(value)


def test_alpha_interpretability_warning(mocker):
    warning = mocker.patch.object(divergence.logger, 'warning')

    Alpha(3.0)
    Alpha(-3.0)
    assert not warning.called

    assert not Alpha(4.0).interpretable
    assert warning.call_count == 1


def test_probability_vector():
    assert len(ProbabilityVector([0.25, 0.75])) == 2

    with pytest.raises(InvalidProbability):
        ProbabilityVector([0.5, 0.6])

    with pytest.raises(InvalidProbability):
        ProbabilityVector([1.5, -0.5])

    with pytest.raises(InvalidProbability):
        ProbabilityVector([])


def test_divergence_examples(rng):
    rho = random_density(3, rng)

    for alpha in (-1, 0, 0.5, 1, 2):
        assert quantum_alpha_divergence(rho, rho, alpha) == pytest.approx(0, abs=1e-12)

    assert quantum_alpha_divergence(KET_0, KET_PLUS, 0) == pytest.approx(2.0, abs=1e-12)

    assert quantum_alpha_divergence(
        np.diag([0.3, 0.7]), np.diag([0.6, 0.4]), -1
    ) == pytest.approx(0.1837869, abs=1e-7)


def test_classical_examples():
    p = [0.3, 0.7]

    assert classical_alpha_divergence(p, p, 0.5) == pytest.approx(0, abs=1e-15)
    assert classical_alpha_divergence([0.5, 0.5], [0.5, 0.5], 2) == pytest.approx(0, abs=1e-15)
    assert classical_alpha_divergence(p, [0.6, 0.4], -1) == pytest.approx(0.1837869, abs=1e-7)
    assert classical_alpha_divergence([0.6, 0.4], p, 1) == pytest.approx(0.1837869, abs=1e-7)


def test_support_mismatch():
    with pytest.raises(SupportMismatch):
        relative_entropy(maximally_mixed(2), KET_0)

    assert relative_entropy(KET_0, maximally_mixed(2)) == pytest.approx(np.log(2))

    with pytest.raises(SupportMismatch):
        quantum_alpha_divergence(KET_0, maximally_mixed(2), 2)

    with pytest.raises(SupportMismatch):
        quantum_alpha_divergence(maximally_mixed(2), KET_0, -2)

    with pytest.raises(SupportMismatch):
        classical_alpha_divergence([1, 0], [0.5, 0.5], 2)

    with pytest.raises(DimensionMismatch):
        quantum_alpha_divergence(maximally_mixed(2), maximally_mixed(3), 0)


def test_positivity_and_identity(rng):
    for rho, sigma in random_pairs(rng, 1000):
        for alpha in ALPHAS:
            assert quantum_alpha_divergence(rho, sigma, alpha) > 1e-8
            assert quantum_alpha_divergence(rho, rho, alpha) == pytest.approx(0, abs=1e-9)


def test_duality(rng):
    for rho, sigma in random_pairs(rng, 1000):
        for alpha in ALPHAS:
            assert quantum_alpha_divergence(rho, sigma, alpha) == pytest.approx(
                quantum_alpha_divergence(sigma, rho, -alpha), abs=1e-10
            )


def test_commutative_reduction(rng):
    for k in range(1000):
        dim = 2 + k % 3
        p = rng.dirichlet(np.ones(dim))
        q = rng.dirichlet(np.ones(dim))

        for alpha in (-3, -1, 0, 1, 3):
            assert_allclose(
                quantum_alpha_divergence(np.diag(p), np.diag(q), alpha),
                classical_alpha_divergence(p, q, alpha),
                rtol=1e-12, atol=1e-12
            )


def test_limit_continuity(rng):
    for _ in range(20):
        rho = mix(random_density(2, rng), maximally_mixed(2), 0.2)
        sigma = mix(random_density(2, rng), maximally_mixed(2), 0.2)

        for sign in (-1, 1):
            limit = quantum_alpha_divergence(rho, sigma, sign)
            gaps = [
                abs(quantum_alpha_divergence(rho, sigma, sign * a) - limit)
                for a in (0.9, 0.99, 0.999)
            ]

            assert gaps[0] > gaps[1] > gaps[2]
            assert gaps[2] <= 1e-2


def test_fidelity_examples(rng):
    rho = random_density(3, rng)

    assert fidelity(rho, rho) == pytest.approx(1, abs=1e-9)
    assert fidelity(KET_0, KET_PLUS) == pytest.approx(0.707107, abs=1e-6)
    assert fidelity(np.eye(2) / 2, np.diag([0.9, 0.1])) == pytest.approx(0.894427, abs=1e-6)


def test_fidelity_bound(rng):
    for rho, sigma in random_pairs(rng, 1000):
        bound = 4 * (1 - fidelity(rho, sigma))
        assert quantum_alpha_divergence(rho, sigma, 0) >= bound - 1e-9


def test_fidelity_bound_commuting(rng):
    for k in range(200):
        dim = 2 + k % 3
        u = unitary_group.rvs(dim, random_state=rng)
        rho = (u * rng.dirichlet(np.ones(dim))) @ u.conj().T
        sigma = (u * rng.dirichlet(np.ones(dim))) @ u.conj().T

        assert quantum_alpha_divergence(rho, sigma, 0) == pytest.approx(
            4 * (1 - fidelity(rho, sigma)), abs=1e-9
        )


def test_fidelity_pure_states(rng):
    for k in range(200):
        dim = 2 + k % 3
        rho = random_pure(dim, rng)
        sigma = random_pure(dim, rng)
        f = fidelity(rho, sigma)

        assert quantum_alpha_divergence(rho, sigma, 0) == pytest.approx(
            4 * (1 - f ** 2), abs=1e-9
        )


def test_trace_norm():
    assert trace_norm(np.diag([1, -2])) == pytest.approx(3)
    assert trace_norm_distance(KET_0, DensityOperator(np.diag([0, 1]))) == pytest.approx(2)
    assert trace_norm_distance(KET_0, KET_0) == 0
