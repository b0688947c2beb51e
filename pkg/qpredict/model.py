# -*- coding: utf-8 -*-
"""
:authors: qpredict contributors
:license: Apache License, Version 2.0, see LICENSE file

:copyright: (c) 2026 qpredict contributors
"""

import logging

import numpy as np
from six.moves import range

from .divergence import (
    PROBABILITY_TOL, ProbabilityVector, as_alpha, as_probability,
    entrywise_power
)
from .exceptions import (
    DimensionMismatch, DimensionOverflow, ModelError, NegativeProbability,
    NonPositiveNormalizer, SingularLog, SingularPower, SingularState,
    SupportMismatch, ZeroMarginal
)
from .operators import (
    EIG_FLOOR, MAX_DIM, DensityOperator, HermitianOperator, as_density,
    matrix_exp, matrix_log, matrix_power, tensor_power
)
from .utils import outcome_label

#: Слагаемые с апостериорным весом не больше этого не входят в смесь
WEIGHT_FLOOR = 1e-15

#: Исход с маргинальной вероятностью не больше этой считается невозможным
MARGINAL_FLOOR = 1e-300

ROW_SUM_TOL = 1e-9
NEGATIVE_LIKELIHOOD_TOL = 1e-9

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)

logger = logging.getLogger('qpredict')


class ParametricModel(object):
    """ Параметрическое семейство состояний ρ_θ на конечной сетке θ_1..θ_K

    Будущие состояния σ_θ = ρ_θ^⊗M вычисляются сразу и переиспользуются
    для всех исходов и всех alpha.

    :param grid: точки параметра (K чисел или K векторов)
    :param states: состояния ρ_θ одной размерности d
    :param n_copies: число измеряемых копий N
    :param m_copies: число предсказываемых копий M
    :param max_dim: ограничение на d^N и d^M
    """

    __slots__ = (
        'grid', 'states', 'n_copies', 'm_copies', 'max_dim', 'future_states'
    )

    def __init__(self, grid, states, n_copies=1, m_copies=1, max_dim=MAX_DIM):
        states = tuple(as_density(s) for s in states)

        grid = np.array(grid, dtype=float)
        if grid.ndim == 1:
            grid = grid[:, np.newaxis]

        if not states or len(grid) != len(states):
            raise ModelError(
                'Grid ({} points) and states ({}) must have the same '
                'non-zero length'.format(len(grid), len(states))
            )

        dim = states[0].dim

        if any(s.dim != dim for s in states):
            raise DimensionMismatch('All states of a model must share one dimension')

        for copies in (n_copies, m_copies):
            if int(copies) != copies or copies < 1:
                raise ModelError(
                    'Copy counts must be positive integers, got {!r}'.format(copies)
                )

        if dim ** int(n_copies) > max_dim:
            raise DimensionOverflow(dim ** int(n_copies), max_dim)

        grid.setflags(write=False)

        self.grid = grid
        self.states = states
        self.n_copies = int(n_copies)
        self.m_copies = int(m_copies)
        self.max_dim = max_dim

        self.future_states = tuple(
            tensor_power(s, self.m_copies, max_dim) for s in states
        )

    @classmethod
    def qubit_circle(cls, grid_size=8, radius=0.8, mixing=0.1, n_copies=2,
                     m_copies=1, max_dim=MAX_DIM):
        """ Кубиты ½(I + r(cos θ σ_x + sin θ σ_y)), подмешанные к I/2

        ρ_θ = (1 - mixing) ½(I + r(cos θ σ_x + sin θ σ_y)) + mixing I/2,
        θ на равномерной сетке из K точек на [0, 2π).
        """

        thetas = 2 * np.pi * np.arange(grid_size) / grid_size
        identity = np.eye(2, dtype=complex)

        states = []
        for theta in thetas:
            bloch = radius * (np.cos(theta) * PAULI_X + np.sin(theta) * PAULI_Y)
            pure_part = (identity + bloch) / 2
            states.append(
                DensityOperator((1 - mixing) * pure_part + mixing * identity / 2)
            )

        return cls(thetas, states, n_copies, m_copies, max_dim)

    @classmethod
    def diagonal(cls, grid_size=5, low=0.1, high=0.9, n_copies=2, m_copies=1,
                 max_dim=MAX_DIM):
        """ Коммутирующее семейство diag(t, 1 - t), t от low до high """

        points = np.linspace(low, high, grid_size)
        states = [DensityOperator(np.diag([t, 1 - t])) for t in points]

        return cls(points, states, n_copies, m_copies, max_dim)

    @property
    def dim(self):
        return self.states[0].dim

    @property
    def measured_dim(self):
        """ d^N — размерность измеряемой системы """
        return self.dim ** self.n_copies

    @property
    def future_dim(self):
        """ d^M — размерность предсказываемой системы """
        return self.dim ** self.m_copies

    def __len__(self):
        return len(self.states)

    def __repr__(self):
        return '<ParametricModel(K={}, d={}, N={}, M={})>'.format(
            len(self), self.dim, self.n_copies, self.m_copies
        )


class Prior(ProbabilityVector):
    """ Априорные веса точек сетки """

    __slots__ = ()

    @classmethod
    def uniform(cls, size):
        return cls(np.full(size, 1.0 / size))

    @classmethod
    def point_mass(cls, size, index):
        weights = np.zeros(size)
        weights[index] = 1.0
        return cls(weights)


class Posterior(ProbabilityVector):
    """ Апостериорные веса π(θ|x) для исхода ``outcome`` """

    __slots__ = ('outcome',)

    def __init__(self, weights, outcome, tol=PROBABILITY_TOL):
        super(Posterior, self).__init__(weights, tol=tol)
        self.outcome = outcome

    @property
    def mode(self):
        """ Индекс точки сетки с наибольшим весом (при равенстве — первый) """
        return int(np.argmax(self.weights))


def as_prior(prior, size):
    if not isinstance(prior, ProbabilityVector):
        prior = Prior(prior)

    if len(prior) != size:
        raise ModelError(
            'Prior has {} weights for a grid of {} points'.format(len(prior), size)
        )

    return prior


class LikelihoodTable(object):
    """ Таблица p(x|θ_i): строка на точку сетки, столбец на исход

    :param matrix: K x X неотрицательных чисел, строки с суммой 1
    :param outcomes: метки исходов
    """

    __slots__ = ('matrix', 'outcomes', '_index')

    def __init__(self, matrix, outcomes, tol=ROW_SUM_TOL):
        matrix = np.array(matrix, dtype=float)
        outcomes = tuple(outcome_label(x) for x in outcomes)

        if matrix.ndim != 2 or matrix.shape[1] != len(outcomes):
            raise DimensionMismatch(
                'Table of shape {} for {} outcomes'.format(matrix.shape, len(outcomes))
            )

        if np.any(matrix < 0):
            raise ModelError('Likelihoods must be non-negative')

        deviation = float(np.max(np.abs(matrix.sum(axis=1) - 1)))

        if deviation > tol:
            raise ModelError(
                'Likelihood rows must sum to 1, max deviation {:.3e}'.format(deviation)
            )

        matrix.setflags(write=False)

        self.matrix = matrix
        self.outcomes = outcomes
        self._index = {x: i for i, x in enumerate(outcomes)}

    @property
    def shape(self):
        return self.matrix.shape

    def index(self, outcome):
        return self._index[outcome_label(outcome)]

    def column(self, outcome):
        return self.matrix[:, self.index(outcome)]

    def row(self, grid_index):
        return self.matrix[grid_index]


class PredictiveOperator(object):
    """ Обобщенный байесовский предсказательный оператор σ̃ = σ_π/C_α(x)

    :ivar state: нормированное состояние
    :ivar normalizer: C_α(x) = Tr σ_π^(α)(x) > 0
    :ivar alpha: :class:`Alpha`
    """

    __slots__ = ('state', 'normalizer', 'alpha')

    def __init__(self, state, normalizer, alpha):
        if not normalizer > 0:
            raise NonPositiveNormalizer(normalizer)

        self.state = state
        self.normalizer = float(normalizer)
        self.alpha = as_alpha(alpha)

    def __repr__(self):
        return '<PredictiveOperator(alpha={}, C={!r})>'.format(
            self.alpha.value, self.normalizer
        )


def likelihood_table(model, povm):
    """ Таблица p(x|θ) = Tr ρ_θ^⊗N E_x

    Отрицательные значения не ниже -1e-9 (ошибки округления) заменяются
    нулем, строки не перенормируются.

    :param model: :class:`ParametricModel`
    :param povm: :class:`Povm` на d^N
    :rtype: LikelihoodTable
    """

    if povm.dim != model.measured_dim:
        raise DimensionMismatch(
            'POVM acts on dimension {}, model measures d^N = {}'.format(
                povm.dim, model.measured_dim
            )
        )

    rows = []

    for i, rho in enumerate(model.states):
        probabilities = povm.probabilities(
            tensor_power(rho, model.n_copies, model.max_dim)
        )

        j = int(np.argmin(probabilities))

        if probabilities[j] < -NEGATIVE_LIKELIHOOD_TOL:
            raise NegativeProbability(i, povm.outcomes[j], probabilities[j])

        if probabilities[j] < 0:
            logger.debug(
                'Clamped %d negative likelihoods of theta_%d to 0',
                int(np.sum(probabilities < 0)), i
            )
            probabilities = np.where(probabilities < 0, 0.0, probabilities)

        rows.append(probabilities)

    return LikelihoodTable(rows, povm.outcomes)


def exchangeable_state(model, prior, n):
    """ Перестановочное состояние Σ_i π_i ρ_θi^⊗n

    :param model: :class:`ParametricModel`
    :param prior: :class:`Prior`
    :param n: число копий
    """

    prior = as_prior(prior, len(model))

    matrix = sum(
        weight * tensor_power(rho, n, model.max_dim).matrix
        for weight, rho in zip(prior.weights, model.states)
    )

    return DensityOperator._trusted(matrix)


def marginal(prior, table):
    """ Маргинальное распределение исходов p_x = Σ_i π_i p(x|θ_i) """

    prior = as_prior(prior, table.shape[0])

    return ProbabilityVector(prior.weights @ table.matrix, tol=ROW_SUM_TOL)


def posterior(prior, table, x):
    """ Апостериорные веса по правилу Байеса

    :raises ZeroMarginal: исход невозможен при данном априорном распределении
    :rtype: Posterior
    """

    prior = as_prior(prior, table.shape[0])

    joint = prior.weights * table.column(x)
    total = joint.sum()

    if total <= MARGINAL_FLOOR:
        raise ZeroMarginal(outcome_label(x), total)

    return Posterior(joint / total, outcome_label(x))


def alpha_mixture(posterior, states, alpha, weight_floor=WEIGHT_FLOOR):
    """ alpha-смесь состояний по апостериорным весам

    {Σ_i w_i σ_i^((1-α)/2)}^(2/(1-α)) при α != 1,
    exp{Σ_i w_i log σ_i} при α = 1.
    Состояния с весом не больше ``weight_floor`` в смесь не входят.

    :returns: (ненормированная смесь, ее след C_α(x))
    :rtype: (HermitianOperator, float)
    """

    alpha = as_alpha(alpha)
    states = [as_density(s) for s in states]
    weights = np.asarray(posterior.weights)

    if len(weights) != len(states):
        raise ModelError(
            '{} posterior weights for {} states'.format(len(weights), len(states))
        )

    kept = [i for i in range(len(states)) if weights[i] > weight_floor]

    if alpha.is_plus_one:
        exponent = 0

        for i in kept:
            try:
                exponent = exponent + weights[i] * matrix_log(states[i]).matrix
            except SingularLog:
                raise SingularState(i, alpha.value)

        unnormalized = matrix_exp(HermitianOperator._trusted(exponent))

    else:
        inner = 0

        for i in kept:
            try:
                powered = matrix_power(states[i], alpha.rho_exponent)
            except SingularPower:
                raise SingularState(i, alpha.value)

            inner = inner + weights[i] * powered.matrix

        unnormalized = matrix_power(
            HermitianOperator._trusted(inner), alpha.mixture_exponent
        )

    normalizer = unnormalized.trace()

    if not normalizer > 0:
        raise NonPositiveNormalizer(normalizer)

    return unnormalized, normalizer


def predictive_operator(posterior, model, alpha):
    """ Обобщенный байесовский предсказательный оператор для σ_θ = ρ_θ^⊗M

    :param posterior: :class:`Posterior`
    :param model: :class:`ParametricModel`
    :param alpha: :class:`Alpha` или число
    :rtype: PredictiveOperator
    """

    alpha = as_alpha(alpha)
    unnormalized, normalizer = alpha_mixture(posterior, model.future_states, alpha)

    state = DensityOperator._trusted(unnormalized.matrix / normalizer)

    return PredictiveOperator(state, normalizer, alpha)


def classical_alpha_predictive(posterior, densities, alpha,
                               weight_floor=WEIGHT_FLOOR):
    """ Классическая обобщенная байесовская предсказательная плотность

    Возвращает ненормированный вектор p_π^(α)(y|x) и его сумму;
    нормировку вызывающий код делает сам.

    :param densities: распределения p(y|θ_i) на общем конечном множестве y
    :rtype: (numpy.ndarray, float)
    """

    alpha = as_alpha(alpha)
    densities = np.array([as_probability(d).weights for d in densities])
    weights = np.asarray(posterior.weights)

    if len(weights) != len(densities):
        raise ModelError(
            '{} posterior weights for {} densities'.format(len(weights), len(densities))
        )

    kept = weights > weight_floor
    rows = densities[kept]
    w = weights[kept][:, np.newaxis]

    if alpha.is_plus_one:
        if np.any(rows <= EIG_FLOOR):
            raise SupportMismatch('alpha = 1 mixture needs fully supported densities')

        raw = np.exp(np.sum(w * np.log(rows), axis=0))

    else:
        if alpha.rho_exponent < 0 and np.any(rows <= EIG_FLOOR):
            raise SupportMismatch(
                'alpha = {} mixture needs fully supported densities'.format(alpha.value)
            )

        powered = np.array([entrywise_power(r, alpha.rho_exponent) for r in rows])
        inner = np.sum(w * powered, axis=0)
        raw = entrywise_power(inner, alpha.mixture_exponent)

    return raw, float(raw.sum())
