# -*- coding: utf-8 -*-
"""
:authors: qpredict contributors
:license: Apache License, Version 2.0, see LICENSE file

:copyright: (c) 2026 qpredict contributors
"""

from collections import namedtuple
from functools import reduce

import numpy as np

from .exceptions import (
    DimensionMismatch, DimensionOverflow, DuplicateOutcome, InvalidCopies,
    NonHermitian, NotComplete, NotNormalized, NotPositive, SingularLog,
    SingularPower
)
from .utils import outcome_label

#: Граница носителя: собственные числа не больше нее считаются нулевыми
EIG_FLOOR = 1e-12

HERMITIAN_TOL = 1e-12
PSD_TOL = 1e-10
TRACE_TOL = 1e-10
TRACE_IMAG_TOL = 1e-12

MAX_DIM = 4096

Spectrum = namedtuple('Spectrum', ['eigenvalues', 'eigenvectors'])


def _frozen(array):
    array.setflags(write=False)
    return array


def _symmetrize(matrix):
    return (matrix + matrix.conj().T) / 2


class HermitianOperator(object):
    """ Эрмитов оператор на конечномерном пространстве

    Матрица копируется и замораживается, объект неизменяем после создания.
    Разложение по собственным векторам вычисляется один раз при первом
    обращении (см. :func:`eigh`).

    :param matrix: квадратная комплексная матрица
    :param tol: допустимое отклонение max|A - A^H|
    """

    __slots__ = ('matrix', '_spectrum')

    def __init__(self, matrix, tol=HERMITIAN_TOL):
        matrix = np.array(matrix, dtype=complex)

        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] \
                or not matrix.shape[0]:
            raise DimensionMismatch(
                'Expected a non-empty square matrix, got shape {}'.format(
                    matrix.shape
                )
            )

        deviation = float(np.max(np.abs(matrix - matrix.conj().T)))

        if deviation > tol:
            raise NonHermitian(deviation, tol)

        self.matrix = _frozen(matrix)
        self._spectrum = None

    @classmethod
    def symmetrized(cls, matrix):
        """ Создать оператор из (A + A^H)/2 """
        return cls(_symmetrize(np.asarray(matrix, dtype=complex)))

    @classmethod
    def _trusted(cls, matrix):
        obj = cls.__new__(cls)
        obj.matrix = _frozen(_symmetrize(np.asarray(matrix, dtype=complex)))
        obj._spectrum = None
        return obj

    @property
    def dim(self):
        return self.matrix.shape[0]

    def trace(self):
        """ Вещественная часть следа """
        return float(np.trace(self.matrix).real)

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.matrix.copy()

        return self.matrix.astype(dtype)

    def __repr__(self):
        return '<{}(dim={})>'.format(type(self).__name__, self.dim)


class DensityOperator(HermitianOperator):
    """ Состояние: положительный эрмитов оператор с единичным следом

    :param matrix: квадратная комплексная матрица
    """

    __slots__ = ()

    def __init__(self, matrix, tol=HERMITIAN_TOL):
        super(DensityOperator, self).__init__(matrix, tol=tol)

        smallest = eigh(self).eigenvalues[0]

        if smallest < -PSD_TOL:
            raise NotPositive(smallest)

        _check_trace(self.matrix)

    @classmethod
    def _trusted(cls, matrix):
        obj = super(DensityOperator, cls)._trusted(matrix)
        _check_trace(obj.matrix, tol=1e-9)
        return obj


def _check_trace(matrix, tol=TRACE_TOL):
    trace = np.trace(matrix)

    if abs(trace.real - 1) > tol or abs(trace.imag) > TRACE_IMAG_TOL:
        raise NotNormalized(trace)


def as_hermitian(a):
    if isinstance(a, HermitianOperator):
        return a

    return HermitianOperator(a)


def as_density(a):
    if isinstance(a, DensityOperator):
        return a

    if isinstance(a, HermitianOperator):
        return DensityOperator(a.matrix)

    return DensityOperator(a)


def eigh(a):
    """ Спектральное разложение эрмитова оператора

    :param a: :class:`HermitianOperator` или матрица
    :returns: :class:`Spectrum` с собственными числами по возрастанию и
        унитарной матрицей собственных векторов (по столбцам)
    """

    a = as_hermitian(a)

    if a._spectrum is None:
        eigenvalues, eigenvectors = np.linalg.eigh(a.matrix)
        a._spectrum = Spectrum(_frozen(eigenvalues), _frozen(eigenvectors))

    return a._spectrum


def _from_spectrum(eigenvectors, values):
    return HermitianOperator._trusted((eigenvectors * values) @ eigenvectors.conj().T)


def matrix_power(a, p, floor=EIG_FLOOR):
    """ Дробная степень положительного оператора U diag(λ^p) U^H

    Собственные числа не больше ``floor`` образуют ядро: при p > 0 они
    отображаются в 0, при p = 0 получается проектор на носитель,
    при p < 0 вызывается :class:`SingularPower`.

    :param a: положительный полуопределенный оператор
    :param p: показатель степени
    :type p: float
    """

    a = as_hermitian(a)
    p = float(p)

    eigenvalues, eigenvectors = eigh(a)

    if eigenvalues[0] < -PSD_TOL:
        raise NotPositive(eigenvalues[0])

    if p == 1:
        return a

    support = eigenvalues > floor

    if p < 0 and not support.all():
        raise SingularPower(p, eigenvalues[0])

    powered = np.zeros_like(eigenvalues)
    powered[support] = np.power(eigenvalues[support], p)

    return _from_spectrum(eigenvectors, powered)


def matrix_log(a, floor=EIG_FLOOR):
    """ Натуральный логарифм положительно определенного оператора """

    eigenvalues, eigenvectors = eigh(a)

    if eigenvalues[0] <= floor:
        raise SingularLog(eigenvalues[0])

    return _from_spectrum(eigenvectors, np.log(eigenvalues))


def matrix_exp(a):
    """ Экспонента эрмитова оператора, результат положительно определен """

    eigenvalues, eigenvectors = eigh(a)

    return _from_spectrum(eigenvectors, np.exp(eigenvalues))


def tensor_product(a, b):
    """ Тензорное произведение A ⊗ B

    Составной индекс строк и столбцов: i * dim(B) + j (как у numpy.kron).
    Произведение двух состояний снова является :class:`DensityOperator`.
    """

    a = as_hermitian(a)
    b = as_hermitian(b)

    cls = HermitianOperator

    if isinstance(a, DensityOperator) and isinstance(b, DensityOperator):
        cls = DensityOperator

    return cls._trusted(np.kron(a.matrix, b.matrix))


def tensor_power(rho, n, max_dim=MAX_DIM):
    """ n-кратная тензорная степень состояния ρ^⊗n

    :param rho: состояние
    :param n: число копий, n >= 1
    :param max_dim: ограничение на размерность результата
    """

    rho = as_density(rho)

    if int(n) != n or n < 1:
        raise InvalidCopies(n)

    n = int(n)
    dim = rho.dim ** n

    if dim > max_dim:
        raise DimensionOverflow(dim, max_dim)

    if n == 1:
        return rho

    return DensityOperator._trusted(
        reduce(np.kron, [rho.matrix] * n)
    )


def maximally_mixed(dim):
    """ Состояние I/d """
    return DensityOperator._trusted(np.eye(dim, dtype=complex) / dim)


def mix(rho, tau, rate):
    """ Смесь (1 - rate) ρ + rate τ, перенормированная на единичный след

    При rate == 0 возвращается сам ρ.
    """

    if rate == 0:
        return rho

    matrix = (1 - rate) * rho.matrix + rate * tau.matrix

    return DensityOperator._trusted(matrix / np.trace(matrix).real)


def random_density(dim, rng, rank=None):
    """ Случайное состояние из ансамбля Жинибра: G G^H / Tr(G G^H)

    :param dim: размерность
    :param rng: :class:`numpy.random.Generator`
    :param rank: ранг (по умолчанию полный)
    """

    rank = dim if rank is None else rank

    g = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    matrix = g @ g.conj().T

    return DensityOperator._trusted(matrix / np.trace(matrix).real)


def random_pure(dim, rng):
    """ Случайное чистое состояние |ψ><ψ| (мера Хаара) """

    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    v /= np.linalg.norm(v)

    return DensityOperator._trusted(np.outer(v, v.conj()))


class Povm(object):
    """ Конечное измерение: набор положительных операторов с суммой I

    :param elements: операторы E_x, одной размерности
    :param outcomes: метки исходов (по умолчанию '0', '1', ...)
    """

    __slots__ = ('outcomes', 'elements', 'dim', '_stack')

    def __init__(self, elements, outcomes=None, tol=PSD_TOL):
        elements = tuple(as_hermitian(e) for e in elements)

        if not elements:
            raise DimensionMismatch('POVM must have at least one element')

        dim = elements[0].dim

        if any(e.dim != dim for e in elements):
            raise DimensionMismatch('POVM elements must share one dimension')

        if outcomes is None:
            outcomes = range(len(elements))

        outcomes = tuple(outcome_label(x) for x in outcomes)

        if len(outcomes) != len(elements):
            raise DimensionMismatch(
                '{} outcome labels for {} elements'.format(
                    len(outcomes), len(elements)
                )
            )

        seen = set()

        for x in outcomes:
            if x in seen:
                raise DuplicateOutcome(x)

            seen.add(x)

        for i, element in enumerate(elements):
            smallest = eigh(element).eigenvalues[0]

            if smallest < -tol:
                raise NotPositive(smallest, index=i)

        stack = np.array([e.matrix for e in elements])
        deviation = float(np.max(np.abs(stack.sum(axis=0) - np.eye(dim))))

        if deviation > tol:
            raise NotComplete(deviation)

        self.outcomes = outcomes
        self.elements = elements
        self.dim = dim

        self._stack = _frozen(stack)

    def __len__(self):
        return len(self.elements)

    def probabilities(self, rho):
        """ Вектор Re Tr(ρ E_x) по всем исходам (без отсечения) """
        return np.einsum('ij,xji->x', rho.matrix, self._stack).real

    def __repr__(self):
        return '<Povm(dim={}, outcomes={})>'.format(self.dim, len(self))


def validate_povm(elements, outcomes=None):
    """ Проверка аксиом POVM

    :param elements: список эрмитовых операторов
    :param outcomes: метки исходов
    :raises NotPositive: элемент с собственным числом < -1e-10
    :raises NotComplete: сумма отличается от I больше чем на 1e-10
    :raises DuplicateOutcome: повторяющаяся метка исхода
    :rtype: Povm
    """

    return Povm(elements, outcomes)
