import numpy as np
import pytest
from numpy.testing import assert_allclose

from qpredict.divergence import Alpha
from qpredict.exceptions import (
    DimensionMismatch, ModelError, NegativeProbability, SingularState,
    ZeroMarginal
)
from qpredict.model import (
    LikelihoodTable, ParametricModel, Posterior, Prior, alpha_mixture,
    classical_alpha_predictive, exchangeable_state, likelihood_table,
    marginal, posterior, predictive_operator
)
from qpredict.operators import Povm, random_density, tensor_power
from qpredict.povm import z_product

DIAGONALS = [np.diag([0.3, 0.7]), np.diag([0.7, 0.3])]
PROJECTORS = [np.diag([1.0, 0.0]), np.diag([0.0, 1.0])]


def test_model_validation():
    with pytest.raises(ModelError):
        ParametricModel([0, 1], DIAGONALS[:1])

    with pytest.raises(DimensionMismatch):
        ParametricModel([0, 1], [DIAGONALS[0], np.eye(3) / 3])

    with pytest.raises(ModelError):
        ParametricModel([0], DIAGONALS[:1], n_copies=0)

    model = ParametricModel([0, 1], DIAGONALS, n_copies=2, m_copies=3)

    assert (model.dim, model.measured_dim, model.future_dim) == (2, 4, 8)
    assert_allclose(model.future_states[0].matrix, tensor_power(DIAGONALS[0], 3).matrix)


def test_qubit_circle_family():
    model = ParametricModel.qubit_circle()

    assert len(model) == 8
    assert (model.n_copies, model.m_copies) == (2, 1)

    for state in model.states:
        assert_allclose(np.linalg.eigvalsh(state.matrix), [0.14, 0.86], atol=1e-12)

    assert_allclose(model.states[0].matrix, [[0.5, 0.36], [0.36, 0.5]], atol=1e-15)


def test_likelihood_table():
    model = ParametricModel([0.3], DIAGONALS[:1], n_copies=1)
    assert_allclose(likelihood_table(model, z_product(2, 1)).matrix, [[0.3, 0.7]])

    model = ParametricModel([0.3], DIAGONALS[:1], n_copies=2)
    table = likelihood_table(model, z_product(2, 2))

    assert table.outcomes == ('00', '01', '10', '11')
    assert_allclose(table.row(0), [0.09, 0.21, 0.21, 0.49])
    assert_allclose(table.column('11'), [0.49])

    with pytest.raises(DimensionMismatch):
        likelihood_table(model, z_product(2, 1))


def test_likelihood_rows_sum_to_one(rng):
    states = [random_density(2, rng) for _ in range(5)]
    model = ParametricModel(range(5), states, n_copies=3)

    table = likelihood_table(model, z_product(2, 3))
    assert_allclose(table.matrix.sum(axis=1), 1, atol=1e-9)


def test_likelihood_clamping(mocker):
    # E_0 has a tiny negative eigenvalue within the POVM tolerance
    eps = 5e-11
    povm = Povm([np.diag([1 + eps, 0.0]), np.diag([-eps, 1.0])])
    model = ParametricModel([0], PROJECTORS[:1], n_copies=1)

    debug = mocker.patch('qpredict.model.logger.debug')
    table = likelihood_table(model, povm)

    assert table.matrix[0, 1] == 0
    assert debug.called


def test_negative_probability(mocker):
    povm = mocker.Mock(dim=2, outcomes=('a', 'b'))
    povm.probabilities.return_value = np.array([1.1, -0.1])
    model = ParametricModel([0], PROJECTORS[:1], n_copies=1)

    with pytest.raises(NegativeProbability) as e:
        likelihood_table(model, povm)

    assert (e.value.grid_index, e.value.outcome) == (0, 'b')


def test_exchangeable_state():
    model = ParametricModel([0, 1], PROJECTORS)

    assert_allclose(
        exchangeable_state(model, Prior.point_mass(2, 0), 2).matrix,
        tensor_power(PROJECTORS[0], 2).matrix
    )
    assert_allclose(exchangeable_state(model, Prior.uniform(2), 1).matrix, np.eye(2) / 2)
    assert_allclose(
        exchangeable_state(model, Prior.uniform(2), 2).matrix,
        np.diag([0.5, 0, 0, 0.5])
    )


def test_posterior():
    table = LikelihoodTable([[0.2, 0.8], [0.6, 0.4]], ['a', 'b'])

    assert_allclose(posterior(Prior.uniform(2), table, 'a').weights, [0.25, 0.75])
    assert_allclose(posterior(Prior.point_mass(2, 1), table, 'b').weights, [0, 1])

    table = LikelihoodTable([[1, 0], [0, 1]], ['a', 'b'])
    result = posterior(Prior.uniform(2), table, 'a')

    assert_allclose(result.weights, [1, 0])
    assert result.outcome == 'a'

    with pytest.raises(ZeroMarginal):
        posterior(Prior.point_mass(2, 0), table, 'b')

    with pytest.raises(ModelError):
        posterior(Prior.uniform(3), table, 'a')


def test_marginal():
    table = LikelihoodTable([[0.2, 0.8], [0.6, 0.4]], ['a', 'b'])

    assert_allclose(marginal(Prior.point_mass(2, 1), table).weights, [0.6, 0.4])
    assert_allclose(
        marginal(Prior.uniform(2), LikelihoodTable(np.eye(2), 'ab')).weights, [0.5, 0.5]
    )
    assert marginal(Prior([0.3, 0.7]), table).weights.sum() == pytest.approx(1, abs=1e-9)


def test_alpha_mixture_examples():
    for alpha in (-2, -1, 0, 0.5, 1, 2):
        unnormalized, normalizer = alpha_mixture(
            Posterior([0, 1], 'x'), DIAGONALS, alpha
        )

        assert_allclose(unnormalized.matrix, DIAGONALS[1], atol=1e-12)
        assert normalizer == pytest.approx(1, abs=1e-12)

    unnormalized, normalizer = alpha_mixture(Posterior([0.5, 0.5], 'x'), PROJECTORS, -1)
    assert_allclose(unnormalized.matrix, np.eye(2) / 2)
    assert normalizer == 1

    unnormalized, normalizer = alpha_mixture(Posterior([0.5, 0.5], 'x'), DIAGONALS, 1)
    assert_allclose(np.diag(unnormalized.matrix).real, [0.458258, 0.458258], atol=1e-6)
    assert normalizer == pytest.approx(0.916515, abs=1e-6)


def test_alpha_mixture_singular_states():
    with pytest.raises(SingularState) as e:
        alpha_mixture(Posterior([0.5, 0.5], 'x'), PROJECTORS, 1)

    assert e.value.grid_index == 0

    with pytest.raises(SingularState):
        alpha_mixture(Posterior([0.5, 0.5], 'x'), PROJECTORS, 2)

    # a zero-weight singular state is dropped from the mixture
    unnormalized, _ = alpha_mixture(
        Posterior([1, 0], 'x'), [DIAGONALS[0], PROJECTORS[0]], 1
    )
    assert_allclose(unnormalized.matrix, DIAGONALS[0], atol=1e-12)


def test_predictive_operator():
    model = ParametricModel([0.3, 0.7], DIAGONALS)

    predictive = predictive_operator(Posterior([0.5, 0.5], 'x'), model, 0)

    assert predictive.normalizer == pytest.approx(0.958258, abs=1e-6)
    assert_allclose(predictive.state.matrix, np.eye(2) / 2, atol=1e-12)

    predictive = predictive_operator(Posterior([0, 1], 'x'), model, 0.5)

    assert predictive.normalizer == pytest.approx(1, abs=1e-12)
    assert_allclose(predictive.state.matrix, DIAGONALS[1], atol=1e-12)


@pytest.mark.parametrize('alpha', [-3, -2, -1, -0.5, 0, 0.5, 1, 2, 3])
def test_equal_states_predict_themselves(rng, alpha):
    state = random_density(3, rng)
    model = ParametricModel(range(4), [state] * 4)

    predictive = predictive_operator(
        Posterior(rng.dirichlet(np.ones(4)), 'x'), model, alpha
    )

    assert predictive.normalizer == pytest.approx(1, abs=1e-10)
    assert np.max(np.abs(predictive.state.matrix - state.matrix)) <= 1e-10


def test_minus_one_is_posterior_mean(rng):
    states = [random_density(3, rng) for _ in range(4)]
    model = ParametricModel(range(4), states)
    weights = rng.dirichlet(np.ones(4))

    predictive = predictive_operator(Posterior(weights, 'x'), model, Alpha(-1))
    mean = sum(w * s.matrix for w, s in zip(weights, states))

    assert predictive.normalizer == pytest.approx(1, abs=1e-12)
    assert np.sum(np.linalg.svd(predictive.state.matrix - mean, compute_uv=False)) <= 1e-12


def test_classical_predictive():
    raw, normalizer = classical_alpha_predictive(
        Posterior([0.5, 0.5], 'x'), [[0.3, 0.7], [0.7, 0.3]], 0
    )

    assert_allclose(raw, [0.479129, 0.479129], atol=1e-6)
    assert normalizer == pytest.approx(0.958258, abs=1e-6)

    raw, normalizer = classical_alpha_predictive(
        Posterior([0, 1], 'x'), [[0.3, 0.7], [0.6, 0.4]], 0.5
    )
    assert_allclose(raw, [0.6, 0.4])
    assert normalizer == pytest.approx(1)


def test_quantum_predictive_matches_classical(rng):
    for k in range(50):
        grid = rng.dirichlet(np.ones(3), size=4)
        model = ParametricModel(range(4), [np.diag(p) for p in grid])
        weights = Posterior(rng.dirichlet(np.ones(4)), 'x')

        for alpha in (-3, -1, -0.5, 0, 0.5, 1, 3):
            predictive = predictive_operator(weights, model, alpha)
            raw, normalizer = classical_alpha_predictive(weights, grid, alpha)

            assert_allclose(
                np.diag(predictive.state.matrix).real, raw / normalizer,
                rtol=1e-12, atol=1e-12
            )
