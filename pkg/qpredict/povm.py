# -*- coding: utf-8 -*-
"""
:authors: qpredict contributors
:license: Apache License, Version 2.0, see LICENSE file

:copyright: (c) 2026 qpredict contributors
"""

import itertools

import numpy as np
from six.moves import range

from .enums import PovmKind
from .exceptions import DimensionMismatch
from .operators import Povm, validate_povm

SQRT_HALF = np.sqrt(0.5)

BELL_VECTORS = (
    ('phi+', np.array([1, 0, 0, 1]) * SQRT_HALF),
    ('phi-', np.array([1, 0, 0, -1]) * SQRT_HALF),
    ('psi+', np.array([0, 1, 1, 0]) * SQRT_HALF),
    ('psi-', np.array([0, 1, -1, 0]) * SQRT_HALF),
)

PAULI_VECTORS = (
    ('x+', np.array([1, 1]) * SQRT_HALF),
    ('x-', np.array([1, -1]) * SQRT_HALF),
    ('y+', np.array([1, 1j]) * SQRT_HALF),
    ('y-', np.array([1, -1j]) * SQRT_HALF),
    ('z+', np.array([1, 0])),
    ('z-', np.array([0, 1])),
)


def _projector(vector):
    vector = np.asarray(vector, dtype=complex)
    return np.outer(vector, vector.conj())


def z_product(dim, n_copies):
    """ Проекторы вычислительного базиса на d^N

    Метка исхода — цифры базисных индексов каждой копии, например ``'01'``.
    """

    total = dim ** n_copies
    separator = '' if dim <= 10 else '-'

    elements = []
    outcomes = []

    for digits in itertools.product(range(dim), repeat=n_copies):
        index = int(np.ravel_multi_index(digits, (dim,) * n_copies))

        element = np.zeros((total, total), dtype=complex)
        element[index, index] = 1

        elements.append(element)
        outcomes.append(separator.join(str(i) for i in digits))

    return validate_povm(elements, outcomes)


def bell():
    """ Проективное измерение в базисе Белла (два кубита) """

    return validate_povm(
        [_projector(v) for _, v in BELL_VECTORS],
        [label for label, _ in BELL_VECTORS]
    )


def trivial(dim):
    """ Неинформативное измерение из одного элемента I """
    return validate_povm([np.eye(dim)], ['any'])


def pauli6_product(n_copies):
    """ Шестиисходное измерение Паули {±x, ±y, ±z}/3 на каждом кубите """

    single = [(label, _projector(v) / 3) for label, v in PAULI_VECTORS]

    elements = []
    outcomes = []

    for combo in itertools.product(single, repeat=n_copies):
        element = np.ones((1, 1), dtype=complex)

        for _, factor in combo:
            element = np.kron(element, factor)

        elements.append(element)
        outcomes.append(''.join(label for label, _ in combo))

    return validate_povm(elements, outcomes)


def build_povm(kind, dim, n_copies, elements=None, outcomes=None):
    """ Построить измерение на d^N по его виду

    :param kind: :class:`PovmKind` или его строковое значение
    :param dim: размерность одной копии
    :param n_copies: число измеряемых копий N
    :param elements: матрицы для ``explicit``
    :param outcomes: метки исходов для ``explicit``
    :rtype: Povm
    """

    kind = PovmKind(kind)

    if kind is PovmKind.Z_PRODUCT:
        return z_product(dim, n_copies)

    if kind is PovmKind.TRIVIAL:
        return trivial(dim ** n_copies)

    if kind is PovmKind.BELL:
        if dim != 2 or n_copies != 2:
            raise DimensionMismatch(
                'Bell measurement needs two qubits (d = 2, N = 2), '
                'got d = {}, N = {}'.format(dim, n_copies)
            )
        return bell()

    if kind is PovmKind.PAULI6_PRODUCT:
        if dim != 2:
            raise DimensionMismatch(
                'Pauli measurement needs qubits, got d = {}'.format(dim)
            )
        return pauli6_product(n_copies)

    povm = Povm(elements or [], outcomes)

    if povm.dim != dim ** n_copies:
        raise DimensionMismatch(
            'POVM acts on dimension {}, expected d^N = {}'.format(
                povm.dim, dim ** n_copies
            )
        )

    return povm
