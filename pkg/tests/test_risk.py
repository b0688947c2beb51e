import numpy as np
import pytest
from numpy.testing import assert_allclose

from qpredict.divergence import Alpha, relative_entropy, trace_norm_distance
from qpredict.exceptions import NonConvergence, SupportMismatch
from qpredict.model import (
    ParametricModel, Posterior, Prior, likelihood_table, posterior,
    predictive_operator
)
from qpredict.operators import maximally_mixed, mix, random_density
from qpredict.povm import trivial, z_product
from qpredict.risk import (
    Estimator, average_risk, bayes_estimator, estimator_zoo,
    minimize_posterior_risk, perturbed_estimator, risk_gap_direct,
    risk_gap_identity
)

DIAGONALS = [np.diag([0.3, 0.7]), np.diag([0.7, 0.3])]


def test_estimator_cache():
    calls = []

    def func(x):
        calls.append(x)
        return maximally_mixed(2)

    est = Estimator('constant', func)

    assert est('0') is est('0')
    assert calls == ['0']


def test_perfect_estimator_on_single_point(s1):
    model = ParametricModel.qubit_circle(grid_size=1)
    prior = Prior.uniform(1)
    povm = s1.povm
    perfect = Estimator('perfect', lambda x: model.future_states[0])

    for alpha in (-1, 0, 0.5, 1, 2):
        assert average_risk(model, prior, povm, perfect, alpha) == pytest.approx(0, abs=1e-12)


def test_uninformative_measurement():
    model = ParametricModel([0.3, 0.7], DIAGONALS)
    prior = Prior.uniform(2)
    povm = trivial(2)
    half = Estimator('half', lambda x: maximally_mixed(2))

    expected = sum(0.5 * relative_entropy(s, maximally_mixed(2)) for s in DIAGONALS)

    assert average_risk(model, prior, povm, half, -1) == pytest.approx(expected, abs=1e-12)

    bayes = bayes_estimator(model, prior, povm, -1)
    assert_allclose(bayes('any').matrix, np.eye(2) / 2, atol=1e-15)


def test_support_mismatch_context():
    model = ParametricModel([0.3, 0.7], DIAGONALS)
    singular = Estimator('singular', lambda x: np.diag([1.0, 0.0]))

    with pytest.raises(SupportMismatch) as e:
        average_risk(model, Prior.uniform(2), trivial(2), singular, -1)

    assert (e.value.grid_index, e.value.outcome) == (0, 'any')


def test_self_gap(s1):
    for alpha in (-1, 0, 0.5, 1):
        bayes = bayes_estimator(s1.model, s1.prior, s1.povm, alpha)

        assert risk_gap_direct(
            s1.model, s1.prior, s1.povm, bayes, alpha
        ) == pytest.approx(0, abs=1e-10)
        assert risk_gap_identity(
            s1.model, s1.prior, s1.povm, bayes, alpha
        ) == pytest.approx(0, abs=1e-10)


def test_gap_identity_on_s1(s1):
    zoo = {est.name: est for est in s1.zoo(0)}
    plug_in = zoo['plug-in-mode']

    direct = risk_gap_direct(s1.model, s1.prior, s1.povm, plug_in, 0)
    identity = risk_gap_identity(s1.model, s1.prior, s1.povm, plug_in, 0)

    assert direct > 0
    assert direct == pytest.approx(identity, abs=1e-9)

    zoo = {est.name: est for est in s1.zoo(0.5)}
    mean = zoo['posterior-mean']

    assert risk_gap_direct(s1.model, s1.prior, s1.povm, mean, 0.5) == pytest.approx(
        risk_gap_identity(s1.model, s1.prior, s1.povm, mean, 0.5), abs=1e-9
    )


def test_gap_identity_diagonal_model():
    model = ParametricModel.diagonal(grid_size=4, n_copies=2)
    prior = Prior([0.1, 0.2, 0.3, 0.4])
    povm = z_product(2, 2)

    for alpha in (-2, -1, -0.5, 0, 0.5, 1, 2):
        zoo = estimator_zoo(model, prior, povm, alpha, n_perturb=6, seed=7)

        for est in zoo:
            direct = risk_gap_direct(model, prior, povm, est, alpha)
            identity = risk_gap_identity(model, prior, povm, est, alpha)

            assert direct >= -1e-9
            assert direct == pytest.approx(identity, abs=1e-8)


def test_zoo_layout(s1):
    zoo = estimator_zoo(s1.model, s1.prior, s1.povm, 0)
    names = [est.name for est in zoo]

    assert len(zoo) == 3 + 32
    assert names[:3] == ['plug-in-mode', 'posterior-mean', 'prior-predictive']
    assert names[3] == 'perturbed-00@0.01'
    assert names[4] == 'perturbed-01@0.05'
    assert names[5] == 'perturbed-02@0.1'
    assert all(',' not in name for name in names)

    again = estimator_zoo(s1.model, s1.prior, s1.povm, 0)
    assert_allclose(zoo[10]('01').matrix, again[10]('01').matrix, atol=0)


def test_zoo_dominance(s1):
    table = likelihood_table(s1.model, s1.povm)

    for alpha in (-1, 0, 0.5, 1):
        bayes_risk = average_risk(
            s1.model, s1.prior, s1.povm, bayes_estimator(s1.model, s1.prior, s1.povm, alpha),
            alpha, table
        )

        for est in estimator_zoo(s1.model, s1.prior, s1.povm, alpha, table):
            assert average_risk(s1.model, s1.prior, s1.povm, est, alpha, table) >= bayes_risk - 1e-9


def test_perturbation_rate_zero(s1):
    bayes = bayes_estimator(s1.model, s1.prior, s1.povm, 0.5)
    directions = {x: random_density(2, np.random.default_rng(1)) for x in s1.povm.outcomes}

    unchanged = perturbed_estimator(bayes, directions, 0)

    for x in s1.povm.outcomes:
        assert unchanged(x) is bayes(x)


def test_monotone_perturbation(s1, rng):
    table = s1.table

    for alpha in (-1, 0, 0.5, 1):
        bayes = bayes_estimator(s1.model, s1.prior, s1.povm, alpha, table)

        for _ in range(3):
            directions = {x: random_density(2, rng) for x in s1.povm.outcomes}
            risks = [
                average_risk(
                    s1.model, s1.prior, s1.povm,
                    perturbed_estimator(bayes, directions, rate), alpha, table
                )
                for rate in (0, 0.01, 0.05, 0.1)
            ]

            assert all(b >= a - 1e-9 for a, b in zip(risks, risks[1:]))


def test_minimize_point_mass():
    states = [np.diag([0.9, 0.1]), np.eye(2) / 2]

    result = minimize_posterior_risk(
        Posterior([1, 0], 'x'), states, 0.5, maximally_mixed(2)
    )

    assert trace_norm_distance(result, states[0]) <= 1e-4


def test_minimize_commuting_minus_one():
    states = [np.diag([0.2, 0.8]), np.diag([0.6, 0.4])]
    weights = Posterior([0.3, 0.7], 'x')

    result = minimize_posterior_risk(weights, states, Alpha(-1), maximally_mixed(2))

    assert_allclose(np.diag(result.matrix).real, [0.48, 0.52], atol=1e-4)


def test_minimize_matches_closed_form(s1):
    for alpha in (-2, 0, 1):
        weights = posterior(s1.prior, s1.table, '01')
        init = mix(s1.model.future_states[weights.mode], maximally_mixed(2), 0.5)

        result = minimize_posterior_risk(weights, s1.model.future_states, alpha, init)
        expected = predictive_operator(weights, s1.model, alpha).state

        assert trace_norm_distance(result, expected) <= 1e-4


def test_nonconvergence_handler(mocker):
    handler = mocker.Mock()
    states = [np.diag([0.2, 0.8]), np.diag([0.6, 0.4])]

    result = minimize_posterior_risk(
        Posterior([0.5, 0.5], 'x'), states, 0, maximally_mixed(2),
        gradient=lambda params: np.ones_like(params), max_iter=1,
        nonconvergence_handler=handler
    )

    assert handler.call_count == 1
    error = handler.call_args[0][0]

    assert isinstance(error, NonConvergence)
    assert error.state is result
