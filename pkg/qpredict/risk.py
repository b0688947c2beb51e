# -*- coding: utf-8 -*-
"""
:authors: qpredict contributors
:license: Apache License, Version 2.0, see LICENSE file

:copyright: (c) 2026 qpredict contributors
"""

import logging
from collections import namedtuple

import numpy as np
from scipy.optimize import minimize
from six.moves import range

from .divergence import Alpha, as_alpha, quantum_alpha_divergence
from .exceptions import (
    ModelError, NonConvergence, SingularLog, SingularPower, SingularState,
    SupportMismatch
)
from .model import (
    WEIGHT_FLOOR, as_prior, exchangeable_state, likelihood_table, marginal,
    posterior, predictive_operator
)
from .operators import (
    DensityOperator, as_density, eigh, matrix_log, matrix_power, mix,
    random_density
)
from .utils import make_rng

#: Слагаемые с p(x|θ) не больше этого не входят в риск
LIKELIHOOD_FLOOR = 1e-300

#: Число случайных возмущений байесовского оценщика в наборе кандидатов
N_PERTURB = 32

#: Доли подмешивания случайного состояния, по кругу
PERTURBATION_RATES = (0.01, 0.05, 0.1)

FINITE_DIFFERENCE_STEP = 1e-6
OPTIMIZER_GTOL = 1e-8
OPTIMIZER_MAX_ITER = 5000

#: Оптимизация считается несошедшейся, если итоговый градиент больше этого
NONCONVERGENCE_GRADIENT = 1e-5

MINUS_ONE = Alpha(-1.0)

logger = logging.getLogger('qpredict')

RiskReport = namedtuple('RiskReport', [
    'alpha', 'estimator', 'risk', 'bayes_risk',
    'gap_direct', 'gap_identity', 'residual', 'opt_trace_dist'
])


class Estimator(object):
    """ Оценщик: отображение исход x -> состояние σ̂(x) на d^M

    Значения кэшируются по исходу.

    :param name: имя для отчетов
    :param func: функция исхода, возвращающая :class:`DensityOperator`
    """

    __slots__ = ('name', '_func', '_cache')

    def __init__(self, name, func):
        self.name = name
        self._func = func
        self._cache = {}

    def __call__(self, outcome):
        try:
            return self._cache[outcome]
        except KeyError:
            state = self._cache[outcome] = as_density(self._func(outcome))
            return state

    def __repr__(self):
        return '<Estimator({!r})>'.format(self.name)


def average_risk(model, prior, povm, est, alpha, table=None):
    """ Усредненный риск Σ_i π_i Σ_x p(x|θ_i) D(σ_θi || σ̂(x))

    :param model: :class:`ParametricModel`
    :param prior: :class:`Prior`
    :param povm: :class:`Povm`
    :param est: :class:`Estimator`
    :param alpha: :class:`Alpha` или число
    :param table: готовая :class:`LikelihoodTable` (иначе строится заново)
    :raises SupportMismatch: с указанием точки сетки и исхода
    """

    alpha = as_alpha(alpha)
    prior = as_prior(prior, len(model))

    if table is None:
        table = likelihood_table(model, povm)

    total = 0.0

    for i, (weight, sigma) in enumerate(zip(prior.weights, model.future_states)):
        if weight == 0:
            continue

        for j, x in enumerate(table.outcomes):
            likelihood = table.matrix[i, j]

            if likelihood <= LIKELIHOOD_FLOOR:
                continue

            try:
                divergence = quantum_alpha_divergence(sigma, est(x), alpha)
            except SupportMismatch as e:
                raise e.with_context(i, x)

            total += weight * likelihood * divergence

    return total


def bayes_estimator(model, prior, povm, alpha, table=None):
    """ Обобщенный байесовский предсказательный оператор как оценщик """

    alpha = as_alpha(alpha)
    prior = as_prior(prior, len(model))

    if table is None:
        table = likelihood_table(model, povm)

    def predict(x):
        return predictive_operator(posterior(prior, table, x), model, alpha).state

    return Estimator('bayes', predict)


def risk_gap_direct(model, prior, povm, est, alpha, table=None):
    """ Разность рисков оценщика и байесовского оператора

    Обе суммы считаются независимо через :func:`average_risk`.
    """

    alpha = as_alpha(alpha)

    if table is None:
        table = likelihood_table(model, povm)

    bayes_risk = average_risk(
        model, prior, povm,
        bayes_estimator(model, prior, povm, alpha, table),
        alpha, table
    )

    return average_risk(model, prior, povm, est, alpha, table) - bayes_risk


def risk_gap_identity(model, prior, povm, est, alpha, table=None):
    """ Разность рисков через тождество Σ_x p_x C_α(x)^((1-α)/2) D(σ̃ || σ̂)

    При α = ±1 множитель равен 1.
    """

    alpha = as_alpha(alpha)
    prior = as_prior(prior, len(model))

    if table is None:
        table = likelihood_table(model, povm)

    p = marginal(prior, table)
    total = 0.0

    for j, x in enumerate(table.outcomes):
        p_x = p.weights[j]

        if p_x <= LIKELIHOOD_FLOOR:
            continue

        predictive = predictive_operator(posterior(prior, table, x), model, alpha)

        if alpha.is_limit:
            factor = 1.0
        else:
            factor = predictive.normalizer ** alpha.rho_exponent

        try:
            divergence = quantum_alpha_divergence(predictive.state, est(x), alpha)
        except SupportMismatch as e:
            raise e.with_context(None, x)

        total += p_x * factor * divergence

    return total


def perturbed_estimator(base, directions, rate, name=None):
    """ Возмущение оценщика: (1 - rate) σ̂(x) + rate τ_x, перенормированное

    :param base: исходный :class:`Estimator`
    :param directions: словарь исход -> состояние τ_x
    :param rate: доля подмешивания; при 0 возвращается ровно σ̂(x)
    """

    def perturb(x):
        return mix(base(x), directions[x], rate)

    return Estimator(name or '{}~{}'.format(base.name, rate), perturb)


def estimator_zoo(model, prior, povm, alpha, table=None, n_perturb=N_PERTURB,
                  rates=PERTURBATION_RATES, seed=None):
    """ Набор оценщиков-кандидатов для проверки оптимальности

    Порядок: оценка по моде апостериорного распределения, апостериорное
    среднее (α = -1 смесь), априорное предсказание без учета x, затем
    ``n_perturb`` случайных возмущений байесовского оператора.
    Направления возмущений выбираются заранее из генератора с зерном
    ``seed`` в порядке (номер, исход).

    :rtype: list of Estimator
    """

    alpha = as_alpha(alpha)
    prior = as_prior(prior, len(model))

    if table is None:
        table = likelihood_table(model, povm)

    bayes = bayes_estimator(model, prior, povm, alpha, table)
    constant = exchangeable_state(model, prior, model.m_copies)

    def plug_in(x):
        return model.future_states[posterior(prior, table, x).mode]

    def posterior_mean(x):
        return predictive_operator(posterior(prior, table, x), model, MINUS_ONE).state

    zoo = [
        Estimator('plug-in-mode', plug_in),
        Estimator('posterior-mean', posterior_mean),
        Estimator('prior-predictive', lambda x: constant),
    ]

    rng = make_rng(seed)

    for k in range(n_perturb):
        rate = rates[k % len(rates)]
        directions = {
            x: random_density(model.future_dim, rng) for x in table.outcomes
        }

        zoo.append(perturbed_estimator(
            bayes, directions, rate, name='perturbed-{:02d}@{}'.format(k, rate)
        ))

    return zoo


def _entropy_term(state):
    eigenvalues = eigh(state).eigenvalues
    support = eigenvalues > 0
    return float(np.sum(eigenvalues[support] * np.log(eigenvalues[support])))


def _real_trace_product(a, b):
    return float(np.sum(a * b.T).real)


class PosteriorRiskObjective(object):
    """ τ -> Σ_i w_i D(σ_i || τ) с заранее посчитанными слагаемыми,
    зависящими только от σ_i
    """

    __slots__ = ('alpha', '_constant', '_operator')

    def __init__(self, weights, states, alpha):
        self.alpha = alpha

        kept = [i for i in range(len(states)) if weights[i] > WEIGHT_FLOOR]

        self._constant = 0.0
        self._operator = 0

        for i in kept:
            sigma = states[i]

            if alpha.is_minus_one:
                self._constant += weights[i] * _entropy_term(sigma)
                term = sigma.matrix
            elif alpha.is_plus_one:
                try:
                    term = matrix_log(sigma).matrix
                except SingularLog:
                    raise SingularState(i, alpha.value)
            else:
                term = matrix_power(sigma, alpha.rho_exponent).matrix

            self._operator = self._operator + weights[i] * term

    def __call__(self, tau):
        if self.alpha.is_minus_one:
            return self._constant - _real_trace_product(
                self._operator, matrix_log(tau).matrix
            )

        if self.alpha.is_plus_one:
            return _entropy_term(tau) - _real_trace_product(tau.matrix, self._operator)

        overlap = _real_trace_product(
            self._operator, matrix_power(tau, self.alpha.sigma_exponent).matrix
        )

        return self.alpha.prefactor * (1 - overlap)


def _cholesky_parameters(state):
    """ Параметры нижнетреугольного L с LL^H = state """

    factor = np.linalg.cholesky(state.matrix)
    lower = np.tril_indices(state.dim, -1)

    return np.concatenate([
        np.diag(factor).real, factor[lower].real, factor[lower].imag
    ])


def _state_from_parameters(params, dim):
    lower = np.tril_indices(dim, -1)
    n_off = len(lower[0])

    factor = np.diag(params[:dim]).astype(complex)
    factor[lower] = params[dim:dim + n_off] + 1j * params[dim + n_off:]

    matrix = factor @ factor.conj().T

    return DensityOperator._trusted(matrix / np.trace(matrix).real)


def _central_difference(func, params, step):
    gradient = np.empty_like(params)

    for k in range(len(params)):
        shift = np.zeros_like(params)
        shift[k] = step
        gradient[k] = (func(params + shift) - func(params - shift)) / (2 * step)

    return gradient


def _log_nonconvergence(error):
    logger.warning('%s; using the last iterate', error)


def minimize_posterior_risk(posterior, states, alpha, init, gradient=None,
                            max_iter=OPTIMIZER_MAX_ITER, gtol=OPTIMIZER_GTOL,
                            step=FINITE_DIFFERENCE_STEP,
                            nonconvergence_handler=None):
    """ Численный минимизатор апостериорного риска Σ_i π(θ_i|x) D(σ_θi || τ)

    Состояние параметризуется как τ = LL^H / Tr(LL^H) с нижнетреугольной
    комплексной L; поиск ведется квазиньютоновским методом (BFGS) по
    градиенту из центральных разностей или по ``gradient``.

    :param posterior: :class:`Posterior`
    :param states: состояния σ_θi
    :param alpha: :class:`Alpha` или число
    :param init: начальное состояние полного ранга
    :param gradient: функция параметров L, возвращающая градиент
    :param nonconvergence_handler: вызывается с :class:`NonConvergence`,
        если итоговый градиент больше 1e-5 (по умолчанию — предупреждение
        в лог)
    :rtype: DensityOperator
    """

    alpha = as_alpha(alpha)
    states = [as_density(s) for s in states]
    init = as_density(init)
    weights = np.asarray(posterior.weights)

    if len(weights) != len(states):
        raise ModelError(
            '{} posterior weights for {} states'.format(len(weights), len(states))
        )

    objective = PosteriorRiskObjective(weights, states, alpha)
    dim = init.dim

    def func(params):
        try:
            return objective(_state_from_parameters(params, dim))
        except (SingularLog, SingularPower, SupportMismatch):
            return np.inf

    if gradient is None:
        def gradient(params):
            return _central_difference(func, params, step)

    result = minimize(
        func, _cholesky_parameters(init), jac=gradient, method='BFGS',
        options={'gtol': gtol, 'maxiter': max_iter}
    )

    state = _state_from_parameters(result.x, dim)
    final_gradient = float(np.max(np.abs(gradient(result.x))))

    if not final_gradient <= NONCONVERGENCE_GRADIENT:
        handler = nonconvergence_handler or _log_nonconvergence
        handler(NonConvergence(result.nit, final_gradient, state))

    return state
