# -*- coding: utf-8 -*-
"""
:authors: qpredict contributors
:license: Apache License, Version 2.0, see LICENSE file

:copyright: (c) 2026 qpredict contributors
"""

import logging
import math

import numpy as np
from scipy.linalg import svdvals

from .exceptions import (
    ComplexTrace, DimensionMismatch, InvalidAlpha, InvalidProbability,
    NumericalError, SingularPower, SupportMismatch
)
from .operators import EIG_FLOOR, as_density, as_hermitian, eigh, matrix_power

#: За пределами |alpha| <= 3 дивергенция не имеет смысла меры,
#: но формально вычисляется
INTERPRETABLE_ALPHA = 3.0

NEGATIVE_TOL = 1e-9
COMPLEX_TRACE_TOL = 1e-9
SUPPORT_TOL = 1e-10
PROBABILITY_TOL = 1e-10

logger = logging.getLogger('qpredict')


class Alpha(object):
    """ Индекс alpha семейства дивергенций

    Ветви alpha = ±1 выбираются точным сравнением, без переключения
    вблизи ±1.

    :param value: конечное вещественное число
    """

    __slots__ = ('value', 'is_plus_one', 'is_minus_one')

    def __init__(self, value):
        try:
            value = float(value)
        except (TypeError, ValueError):
            raise InvalidAlpha('alpha must be a real number, got {!r}'.format(value))

        if not math.isfinite(value):
            raise InvalidAlpha('alpha must be finite, got {!r}'.format(value))

        self.value = value
        self.is_plus_one = value == 1.0
        self.is_minus_one = value == -1.0

        if not self.interpretable:
            logger.warning(
                'alpha = %s is outside |alpha| <= 3: the divergence is computed '
                'but is not a meaningful measure there', value
            )

    @property
    def interpretable(self):
        return abs(self.value) <= INTERPRETABLE_ALPHA

    @property
    def is_limit(self):
        return self.is_plus_one or self.is_minus_one

    @property
    def rho_exponent(self):
        """ (1 - alpha)/2 — степень первого аргумента дивергенции """
        return (1 - self.value) / 2

    @property
    def sigma_exponent(self):
        """ (1 + alpha)/2 — степень второго аргумента дивергенции """
        return (1 + self.value) / 2

    @property
    def mixture_exponent(self):
        """ 2/(1 - alpha) — внешняя степень alpha-смеси (alpha != 1) """
        return 2 / (1 - self.value)

    @property
    def prefactor(self):
        """ 4/(1 - alpha^2) (alpha != ±1) """
        return 4 / (1 - self.value ** 2)

    def __float__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, Alpha):
            return self.value == other.value

        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return 'Alpha({!r})'.format(self.value)


def as_alpha(value):
    if isinstance(value, Alpha):
        return value

    return Alpha(value)


class ProbabilityVector(object):
    """ Дискретное распределение вероятностей

    :param weights: неотрицательные числа с суммой 1
    :param tol: допустимое отклонение суммы от 1
    """

    __slots__ = ('weights',)

    def __init__(self, weights, tol=PROBABILITY_TOL):
        weights = np.array(weights, dtype=float)

        if weights.ndim != 1 or not weights.size:
            raise InvalidProbability(
                'Expected a non-empty vector, got shape {}'.format(weights.shape)
            )

        if not np.all(np.isfinite(weights)) or np.any(weights < 0):
            raise InvalidProbability('Probabilities must be finite and non-negative')

        total = weights.sum()

        if abs(total - 1) > tol:
            raise InvalidProbability(
                'Probabilities must sum to 1, got {!r}'.format(total)
            )

        weights.setflags(write=False)
        self.weights = weights

    def __len__(self):
        return len(self.weights)

    def __getitem__(self, index):
        return self.weights[index]

    def __iter__(self):
        return iter(self.weights)

    def __array__(self, dtype=None, copy=None):
        return np.array(self.weights, dtype=dtype)

    def __repr__(self):
        return '<{}({})>'.format(type(self).__name__, list(self.weights))


def as_probability(p):
    if isinstance(p, ProbabilityVector):
        return p

    return ProbabilityVector(p)


def _check_divergence(value):
    if value < 0:
        if value < -NEGATIVE_TOL:
            raise NumericalError(
                'Divergence came out negative beyond roundoff: {!r}'.format(value)
            )

        return 0.0

    return float(value)


def relative_entropy(rho, sigma, floor=EIG_FLOOR):
    """ Квантовая относительная энтропия Tr ρ(log ρ - log σ), в натах

    Слагаемые 0 log 0 считаются нулевыми. Если ρ имеет вес больше 1e-10
    на ядре σ, дивергенция бесконечна.

    :raises SupportMismatch: supp(ρ) не содержится в supp(σ)
    """

    rho = as_density(rho)
    sigma = as_density(sigma)

    if rho.dim != sigma.dim:
        raise DimensionMismatch(
            'Dimensions differ: {} and {}'.format(rho.dim, sigma.dim)
        )

    p, u = eigh(rho)
    q, v = eigh(sigma)

    p = np.where(p > floor, p, 0.0)

    # mass[j] = <v_j|ρ|v_j>
    mass = p @ (np.abs(u.conj().T @ v) ** 2)
    kernel = q <= floor

    if mass[kernel].sum() > SUPPORT_TOL:
        raise SupportMismatch(
            'Support of the first state is not contained in the support '
            'of the second (relative entropy is infinite)'
        )

    support = p > 0
    entropy = np.sum(p[support] * np.log(p[support]))
    cross = np.sum(mass[~kernel] * np.log(q[~kernel]))

    return _check_divergence(entropy - cross)


def _trace_product(a, b):
    return np.sum(a.matrix * b.matrix.T)


def quantum_alpha_divergence(rho, sigma, alpha):
    """ Квантовая alpha-дивергенция от ρ к σ

    D(ρ||σ) = 4/(1 - α^2) (1 - Tr σ^((1+α)/2) ρ^((1-α)/2)) при α != ±1,
    D(ρ||σ) = Tr ρ(log ρ - log σ) при α = -1 и D(σ||ρ) при α = +1.

    :param rho: состояние ρ
    :param sigma: состояние σ
    :param alpha: :class:`Alpha` или число
    :rtype: float
    """

    rho = as_density(rho)
    sigma = as_density(sigma)
    alpha = as_alpha(alpha)

    if rho.dim != sigma.dim:
        raise DimensionMismatch(
            'Dimensions differ: {} and {}'.format(rho.dim, sigma.dim)
        )

    if alpha.is_minus_one:
        return relative_entropy(rho, sigma)

    if alpha.is_plus_one:
        return relative_entropy(sigma, rho)

    try:
        sigma_power = matrix_power(sigma, alpha.sigma_exponent)
    except SingularPower:
        raise SupportMismatch(
            'alpha = {} needs a full-rank second argument'.format(alpha.value)
        )

    try:
        rho_power = matrix_power(rho, alpha.rho_exponent)
    except SingularPower:
        raise SupportMismatch(
            'alpha = {} needs a full-rank first argument'.format(alpha.value)
        )

    overlap = _trace_product(sigma_power, rho_power)

    if abs(overlap.imag) > COMPLEX_TRACE_TOL:
        raise ComplexTrace(overlap)

    return _check_divergence(alpha.prefactor * (1 - overlap.real))


def entrywise_power(x, exponent, floor=EIG_FLOOR):
    support = x > floor

    powered = np.zeros_like(x)
    powered[support] = np.power(x[support], exponent)

    return powered


def _classical_relative_entropy(p, q, floor=EIG_FLOOR):
    p = np.where(p > floor, p, 0.0)
    kernel = q <= floor

    if p[kernel].sum() > SUPPORT_TOL:
        raise SupportMismatch(
            'Support of the first distribution is not contained in the '
            'support of the second (relative entropy is infinite)'
        )

    support = p > 0
    entropy = np.sum(p[support] * np.log(p[support]))
    cross = np.sum(p[~kernel] * np.log(q[~kernel]))

    return _check_divergence(entropy - cross)


def classical_alpha_divergence(p, q, alpha, floor=EIG_FLOOR):
    """ Классическая alpha-дивергенция дискретных распределений

    :param p: :class:`ProbabilityVector` или вектор
    :param q: :class:`ProbabilityVector` или вектор
    :param alpha: :class:`Alpha` или число
    """

    p = as_probability(p).weights
    q = as_probability(q).weights
    alpha = as_alpha(alpha)

    if len(p) != len(q):
        raise DimensionMismatch(
            'Lengths differ: {} and {}'.format(len(p), len(q))
        )

    if alpha.is_minus_one:
        return _classical_relative_entropy(p, q, floor)

    if alpha.is_plus_one:
        return _classical_relative_entropy(q, p, floor)

    if alpha.rho_exponent < 0 and np.any(p <= floor):
        raise SupportMismatch(
            'alpha = {} needs a fully supported first argument'.format(alpha.value)
        )

    if alpha.sigma_exponent < 0 and np.any(q <= floor):
        raise SupportMismatch(
            'alpha = {} needs a fully supported second argument'.format(alpha.value)
        )

    overlap = np.sum(
        entrywise_power(p, alpha.rho_exponent, floor)
        * entrywise_power(q, alpha.sigma_exponent, floor)
    )

    return _check_divergence(alpha.prefactor * (1 - overlap))


def fidelity(rho, sigma):
    """ Верность F(ρ, σ) = Tr|√ρ √σ| (сумма сингулярных чисел √ρ √σ)

    :rtype: float in [0, 1]
    """

    rho = as_density(rho)
    sigma = as_density(sigma)

    if rho.dim != sigma.dim:
        raise DimensionMismatch(
            'Dimensions differ: {} and {}'.format(rho.dim, sigma.dim)
        )

    product = matrix_power(rho, 0.5).matrix @ matrix_power(sigma, 0.5).matrix
    value = float(np.sum(svdvals(product)))

    if value < -NEGATIVE_TOL or value > 1 + NEGATIVE_TOL:
        raise NumericalError('Fidelity out of range: {!r}'.format(value))

    return min(max(value, 0.0), 1.0)


def trace_norm(a):
    """ Следовая норма: сумма сингулярных чисел """
    return float(np.sum(svdvals(as_hermitian(a).matrix)))


def trace_norm_distance(rho, sigma):
    """ ||ρ - σ||_1 без множителя 1/2 """
    return float(np.sum(svdvals(np.asarray(rho.matrix) - np.asarray(sigma.matrix))))
