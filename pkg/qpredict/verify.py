# -*- coding: utf-8 -*-
"""
:authors: qpredict contributors
:license: Apache License, Version 2.0, see LICENSE file

:copyright: (c) 2026 qpredict contributors
"""

import logging
from collections import namedtuple

from .divergence import as_alpha, trace_norm_distance
from .exceptions import (
    DimensionMismatch, InvalidAlpha, ModelError, VerificationFailure
)
from .model import ParametricModel, Prior, likelihood_table, marginal, posterior
from .operators import MAX_DIM, maximally_mixed, mix
from .povm import bell, z_product
from .risk import (
    N_PERTURB, RiskReport, Estimator, average_risk, bayes_estimator,
    estimator_zoo, minimize_posterior_risk, risk_gap_identity
)

SCENARIO_ALPHAS = (-1.0, 0.0, 0.5, 1.0)

GAP_TOL = 1e-9
RESIDUAL_TOL = 1e-8
ARGMIN_TOL = 1e-4

#: Исходы с меньшей маргинальной вероятностью не проверяются оптимизатором
ARGMIN_MARGINAL_FLOOR = 1e-12

#: Доля, с которой тестовый хук портит байесовский оператор
SUBOPTIMAL_RATE = 0.5


class Failure(namedtuple('Failure', ['assertion', 'alpha', 'estimator', 'outcome', 'value'])):
    """ Нарушенное утверждение: dominance, identity или argmin """

    __slots__ = ()

    def __str__(self):
        return '{} violated: alpha={}, estimator={}, outcome={}, value={:.6e}'.format(
            self.assertion, self.alpha, self.estimator,
            '*' if self.outcome is None else self.outcome, self.value
        )


class Scenario(object):
    """ Сценарий проверки: модель, априорное распределение, измерение, alpha

    Таблица правдоподобий строится один раз при создании.

    :param model: :class:`ParametricModel`
    :param prior: :class:`Prior` (по умолчанию равномерное)
    :param povm: :class:`Povm` на d^N (по умолчанию вычислительный базис)
    :param alphas: значения alpha для проверки
    :param name: идентификатор сценария в отчетах
    :param seed: зерно для случайных возмущений
    :param n_perturb: число случайных возмущений в наборе кандидатов
    """

    __slots__ = (
        'name', 'model', 'prior', 'povm', 'alphas', 'seed', 'n_perturb',
        'table', 'logger'
    )

    def __init__(self, model, prior=None, povm=None, alphas=SCENARIO_ALPHAS,
                 name='scenario', seed=None, n_perturb=N_PERTURB):
        self.logger = logging.getLogger('qpredict')

        if prior is None:
            prior = Prior.uniform(len(model))
        elif not isinstance(prior, Prior):
            prior = Prior(prior)

        if len(prior) != len(model):
            raise ModelError(
                'Prior has {} weights for a grid of {} points'.format(
                    len(prior), len(model)
                )
            )

        if povm is None:
            povm = z_product(model.dim, model.n_copies)

        if povm.dim != model.measured_dim:
            raise DimensionMismatch(
                'POVM acts on dimension {}, model measures d^N = {}'.format(
                    povm.dim, model.measured_dim
                )
            )

        alphas = tuple(sorted(set(float(a) for a in alphas)))

        if not alphas:
            raise InvalidAlpha('Scenario needs at least one alpha')

        self.name = name
        self.model = model
        self.prior = prior
        self.povm = povm
        self.alphas = alphas
        self.seed = seed
        self.n_perturb = n_perturb

        self.table = likelihood_table(model, povm)

        self.logger.info(
            'Scenario %s: K=%d, d=%d, N=%d, M=%d, %d outcomes',
            name, len(model), model.dim, model.n_copies, model.m_copies, len(povm)
        )

    def marginal(self):
        return marginal(self.prior, self.table)

    def posterior(self, x):
        return posterior(self.prior, self.table, x)

    def bayes(self, alpha):
        return bayes_estimator(self.model, self.prior, self.povm, alpha, self.table)

    def zoo(self, alpha):
        return estimator_zoo(
            self.model, self.prior, self.povm, alpha, self.table,
            n_perturb=self.n_perturb, seed=self.seed
        )

    def risk(self, est, alpha):
        return average_risk(self.model, self.prior, self.povm, est, alpha, self.table)

    def verify(self, alphas=None, inject_suboptimal_bayes=False):
        return verify_theorem(self, alphas, inject_suboptimal_bayes)

    def __repr__(self):
        return '<Scenario({!r}, {!r})>'.format(self.name, self.model)


def scenario_s1(alphas=SCENARIO_ALPHAS, seed=None, max_dim=MAX_DIM):
    """ Кубиты на окружности в плоскости xy: K = 8, N = 2, M = 1,
    измерение в вычислительном базисе на каждой копии
    """

    model = ParametricModel.qubit_circle(
        grid_size=8, radius=0.8, mixing=0.1, n_copies=2, m_copies=1,
        max_dim=max_dim
    )

    return Scenario(model, alphas=alphas, name='s1', seed=seed)


def scenario_diagonal(alphas=SCENARIO_ALPHAS, seed=None, max_dim=MAX_DIM):
    """ Коммутирующее семейство diag(t, 1 - t), t = 0.1..0.9, K = 5, N = 2 """

    model = ParametricModel.diagonal(
        grid_size=5, low=0.1, high=0.9, n_copies=2, m_copies=1, max_dim=max_dim
    )

    return Scenario(model, alphas=alphas, name='diagonal', seed=seed)


def scenario_bell(alphas=SCENARIO_ALPHAS, seed=None, max_dim=MAX_DIM):
    """ Семейство S1, измеряемое в базисе Белла на двух копиях """

    model = ParametricModel.qubit_circle(
        grid_size=8, radius=0.8, mixing=0.1, n_copies=2, m_copies=1,
        max_dim=max_dim
    )

    return Scenario(model, povm=bell(), alphas=alphas, name='bell', seed=seed)


def scenario_single_point(alphas=SCENARIO_ALPHAS, seed=None, max_dim=MAX_DIM):
    """ Вырожденная модель из одной точки: байесовский риск равен нулю """

    model = ParametricModel.qubit_circle(
        grid_size=1, radius=0.8, mixing=0.1, n_copies=2, m_copies=1,
        max_dim=max_dim
    )

    return Scenario(model, alphas=alphas, name='single_point', seed=seed)


BUILTIN_SCENARIOS = {
    's1': scenario_s1,
    'diagonal': scenario_diagonal,
    'bell': scenario_bell,
    'single_point': scenario_single_point,
}


def _suboptimal(bayes, model):
    corruption = model.future_states[0]

    return Estimator(
        bayes.name, lambda x: mix(bayes(x), corruption, SUBOPTIMAL_RATE)
    )


def _argmin_cross_check(scenario, alpha, bayes):
    model = scenario.model
    p = scenario.marginal()

    distances = {}

    for j, x in enumerate(scenario.table.outcomes):
        if p.weights[j] <= ARGMIN_MARGINAL_FLOOR:
            continue

        weights = scenario.posterior(x)
        init = mix(
            model.future_states[weights.mode],
            maximally_mixed(model.future_dim),
            0.5
        )

        optimum = minimize_posterior_risk(weights, model.future_states, alpha, init)
        distances[x] = trace_norm_distance(optimum, bayes(x))

    return distances


def verify_alpha(scenario, alpha, inject_suboptimal_bayes=False):
    """ Проверка теоремы для одного alpha

    :returns: (список :class:`RiskReport`, список :class:`Failure`)
    """

    alpha = as_alpha(alpha)
    model, prior, povm, table = (
        scenario.model, scenario.prior, scenario.povm, scenario.table
    )

    bayes = scenario.bayes(alpha)

    if inject_suboptimal_bayes:
        bayes = _suboptimal(bayes, model)

    bayes_risk = scenario.risk(bayes, alpha)
    failures = []

    distances = _argmin_cross_check(scenario, alpha, bayes)

    for x, distance in sorted(distances.items()):
        if distance > ARGMIN_TOL:
            failures.append(Failure('argmin', alpha.value, bayes.name, x, distance))

    opt_trace_dist = max(distances.values()) if distances else 0.0

    reports = []

    for est in scenario.zoo(alpha):
        risk = scenario.risk(est, alpha)
        gap_direct = risk - bayes_risk
        gap_identity = risk_gap_identity(model, prior, povm, est, alpha, table)
        residual = abs(gap_direct - gap_identity)

        if gap_direct < -GAP_TOL:
            failures.append(Failure('dominance', alpha.value, est.name, None, gap_direct))

        if residual > RESIDUAL_TOL:
            failures.append(Failure('identity', alpha.value, est.name, None, residual))

        reports.append(RiskReport(
            alpha.value, est.name, risk, bayes_risk,
            gap_direct, gap_identity, residual, opt_trace_dist
        ))

    scenario.logger.info(
        'alpha=%s: bayes risk %.6g, min gap %.3g, max residual %.3g, '
        'argmin distance %.3g, %d failures',
        alpha.value, bayes_risk,
        min(r.gap_direct for r in reports) if reports else 0.0,
        max(r.residual for r in reports) if reports else 0.0,
        opt_trace_dist, len(failures)
    )

    return reports, failures


def verify_theorem(scenario, alphas=None, inject_suboptimal_bayes=False):
    """ Численная проверка оптимальности обобщенного байесовского оператора

    Для каждого alpha (по возрастанию) проверяется:
    каждый кандидат из :func:`estimator_zoo` не лучше байесовского
    оператора (с допуском 1e-9); прямая разность рисков совпадает с
    тождеством в пределах 1e-8; численный минимизатор апостериорного риска
    совпадает с байесовским оператором в пределах 1e-4 по следовой норме.

    :param scenario: :class:`Scenario`
    :param alphas: значения alpha (по умолчанию из сценария)
    :param inject_suboptimal_bayes: тестовый хук, портит байесовский оператор
    :raises VerificationFailure: хотя бы одно утверждение нарушено
    :rtype: list of RiskReport
    """

    values = sorted(set(float(a) for a in (alphas or scenario.alphas)))

    reports = []
    failures = []

    for value in values:
        alpha_reports, alpha_failures = verify_alpha(
            scenario, value, inject_suboptimal_bayes
        )
        reports.extend(alpha_reports)
        failures.extend(alpha_failures)

    if failures:
        raise VerificationFailure(failures, reports)

    return reports
