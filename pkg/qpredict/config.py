# -*- coding: utf-8 -*-
"""
:authors: qpredict contributors
:license: Apache License, Version 2.0, see LICENSE file

:copyright: (c) 2026 qpredict contributors
"""

import io
import os
import re
from collections import namedtuple

import numpy as np
import six

from jconfig import Config, ConfigSyntaxError, MemoryConfig

from .enums import ModelFamily, PovmKind, PriorKind
from .exceptions import (
    InvalidProbability, NotPositive, OperatorError, ParseError, ValidationError
)
from .model import ParametricModel, Prior
from .operators import (
    MAX_DIM, DensityOperator, HermitianOperator, validate_povm
)
from .povm import build_povm
from .risk import N_PERTURB
from .utils import DEFAULT_SEED, parse_number_list
from .verify import Scenario

RE_INDEXED_KEY = re.compile(r'^(state|point|element|outcome)_([1-9]\d*)$')
RE_MATRIX_TOKEN = re.compile(r'\s+')

U64_MAX = 0xFFFFFFFFFFFFFFFF

SECTIONS = ('scenario', 'model', 'prior', 'povm', 'alpha')

SCENARIO_KEYS = ('id', 'seed', 'output', 'max_dim', 'n_perturb')
MODEL_KEYS = ('family', 'grid_size', 'n_copies', 'm_copies')
FAMILY_KEYS = {
    ModelFamily.QUBIT_CIRCLE: ('radius', 'mixing'),
    ModelFamily.DIAGONAL: ('low', 'high'),
    ModelFamily.EXPLICIT: (),
}
FAMILY_INDEXED_KEYS = {
    ModelFamily.QUBIT_CIRCLE: (),
    ModelFamily.DIAGONAL: (),
    ModelFamily.EXPLICIT: ('state', 'point'),
}
PRIOR_KEYS = {
    PriorKind.UNIFORM: ('kind',),
    PriorKind.EXPLICIT: ('kind', 'weights'),
}
ALPHA_KEYS = ('values',)

#: Параметры встроенных семейств по умолчанию
FAMILY_DEFAULTS = {
    ModelFamily.QUBIT_CIRCLE: {'grid_size': 8, 'radius': 0.8, 'mixing': 0.1},
    ModelFamily.DIAGONAL: {'grid_size': 5, 'low': 0.1, 'high': 0.9},
    ModelFamily.EXPLICIT: {},
}

BUILTIN_SETTINGS = {
    's1': {
        'scenario': {'id': 's1'},
        'model': {
            'family': 'qubit_circle', 'grid_size': 8, 'n_copies': 2,
            'm_copies': 1, 'radius': 0.8, 'mixing': 0.1
        },
        'prior': {'kind': 'uniform'},
        'povm': {'kind': 'z_product'},
        'alpha': {'values': '-1, 0, 0.5, 1'},
    },
    'diagonal': {
        'scenario': {'id': 'diagonal'},
        'model': {
            'family': 'diagonal', 'grid_size': 5, 'n_copies': 2,
            'm_copies': 1, 'low': 0.1, 'high': 0.9
        },
        'prior': {'kind': 'uniform'},
        'povm': {'kind': 'z_product'},
        'alpha': {'values': '-1, 0, 0.5, 1'},
    },
    'bell': {
        'scenario': {'id': 'bell'},
        'model': {
            'family': 'qubit_circle', 'grid_size': 8, 'n_copies': 2,
            'm_copies': 1, 'radius': 0.8, 'mixing': 0.1
        },
        'prior': {'kind': 'uniform'},
        'povm': {'kind': 'bell'},
        'alpha': {'values': '-1, 0, 0.5, 1'},
    },
}

BUILTIN_PREFIX = 'builtin:'


class ScenarioConfig(namedtuple('ScenarioConfig', [
        'id', 'seed', 'output', 'max_dim', 'n_perturb',
        'family', 'grid_size', 'n_copies', 'm_copies',
        'radius', 'mixing', 'low', 'high', 'states', 'points',
        'prior_kind', 'prior_weights',
        'povm_kind', 'povm_elements', 'povm_outcomes',
        'alphas'])):
    """ Проверенная конфигурация сценария

    Матрицы (``states``, ``povm_elements``) хранятся как кортежи строк
    комплексных чисел.
    """

    __slots__ = ()

    @property
    def dim(self):
        """ Размерность одной копии d """

        if self.family is ModelFamily.EXPLICIT:
            return len(self.states[0])

        return 2

    @property
    def n_states(self):
        if self.family is ModelFamily.EXPLICIT:
            return len(self.states)

        return self.grid_size


def _frozen_matrix(matrix):
    return tuple(tuple(complex(v) for v in row) for row in matrix)


def parse_matrix(text):
    """ Квадратная комплексная матрица из пар ``re,im`` по строкам

    Элемент без запятой считается вещественным.

    :param text: например ``0.5,0 0,0  0,0 0.5,0``
    :rtype: numpy.ndarray
    """

    tokens = [t for t in RE_MATRIX_TOKEN.split(text.strip()) if t]

    values = []

    for token in tokens:
        parts = token.split(',')

        if len(parts) == 1:
            values.append(complex(float(parts[0]), 0))
        elif len(parts) == 2:
            values.append(complex(float(parts[0]), float(parts[1])))
        else:
            raise ValueError('expected re,im pair, got {!r}'.format(token))

    size = int(round(np.sqrt(len(values))))

    if not values or size * size != len(values):
        raise ValueError(
            '{} entries do not form a square matrix'.format(len(values))
        )

    return np.array(values, dtype=complex).reshape(size, size)


def read_state(path):
    """ Состояние из файла с матрицей в формате :func:`parse_matrix`

    Строки, начинающиеся с ``#``, пропускаются.

    :raises ValidationError: файл не содержит квадратной матрицы
    :rtype: DensityOperator
    """

    with io.open(path, 'r', encoding='utf-8') as f:
        text = ' '.join(
            line for line in f if not line.lstrip().startswith('#')
        )

    try:
        matrix = parse_matrix(text)
    except ValueError as e:
        raise ValidationError('{}: {}'.format(path, e))

    return DensityOperator(matrix)


def _positive_integer(text):
    value = int(text, 0)

    if value < 1:
        raise ValueError('must be a positive integer')

    return value


def _seed(text):
    value = int(text, 0)

    if not 0 <= value <= U64_MAX:
        raise ValueError('must be an unsigned 64-bit integer')

    return value


def _alphas(text):
    values = parse_number_list(text)

    if not values:
        raise ValueError('alpha list is empty')

    return tuple(values)


_MISSING = object()


class _ConfigReader(object):
    """ Чтение значений с привязкой ошибок к позиции в файле """

    __slots__ = ('config', 'filename')

    def __init__(self, config, filename):
        self.config = config
        self.filename = filename

    def position(self, section, key=None):
        """ (файл, строка) ключа; для ключа не из файла берется заголовок секции """

        position = self.config.position(section, key)

        if position is None and key is not None:
            position = self.config.position(section)

        if position is not None:
            return self.filename, position[0]

    def error(self, message, section, key=None):
        position = self.position(section, key)

        name = section if key is None else '{}.{}'.format(section, key)

        return ValidationError(
            '{}: {}'.format(name, message), key=name, position=position
        )

    def get(self, section, key, convert=str, default=_MISSING):
        values = self.config.get_section(section)

        if key not in values:
            if default is _MISSING:
                raise self.error('required key is missing', section, key)

            return default

        try:
            return convert(values[key])
        except (TypeError, ValueError) as e:
            raise self.error(
                'invalid value {!r} ({})'.format(values[key], e), section, key
            )

    def indexed(self, section, prefix, convert):
        """ Значения ключей ``prefix_1``, ``prefix_2``, ... по порядку """

        values = self.config.get_section(section)
        found = {}

        for key in values:
            match = RE_INDEXED_KEY.match(key)

            if match and match.group(1) == prefix:
                found[int(match.group(2))] = self.get(section, key, convert)

        if sorted(found) != list(range(1, len(found) + 1)):
            raise self.error(
                '{}_<i> keys must be numbered 1..n without gaps'.format(prefix),
                section
            )

        return [found[i] for i in sorted(found)]

    def check_keys(self, section, allowed, indexed=()):
        for key in self.config.get_section(section):
            match = RE_INDEXED_KEY.match(key)

            if key in allowed or (match and match.group(1) in indexed):
                continue

            raise self.error('unknown key', section, key)


def load_config(config, filename, default_id='scenario'):
    """ Проверенная :class:`ScenarioConfig` из объекта :mod:`jconfig`

    :param config: :class:`jconfig.BaseConfig` с секциями сценария
    :param filename: имя для сообщений об ошибках
    :param default_id: идентификатор, если ``[scenario] id`` не задан
    :raises ValidationError: неизвестная секция или ключ, неверное значение
    """

    reader = _ConfigReader(config, filename)

    for section in config.sections():
        if section not in SECTIONS:
            raise reader.error('unknown section', section)

    reader.check_keys('scenario', SCENARIO_KEYS)

    family = reader.get('model', 'family', ModelFamily)
    reader.check_keys(
        'model', MODEL_KEYS + FAMILY_KEYS[family], FAMILY_INDEXED_KEYS[family]
    )

    defaults = FAMILY_DEFAULTS[family]

    states = points = None

    if family is ModelFamily.EXPLICIT:
        states = tuple(
            _frozen_matrix(m) for m in reader.indexed('model', 'state', parse_matrix)
        )

        if not states:
            raise reader.error('explicit family needs state_1..state_K', 'model')

        points = tuple(reader.indexed('model', 'point', float)) or tuple(
            float(i) for i in range(len(states))
        )

        if len(points) != len(states):
            raise reader.error(
                '{} points for {} states'.format(len(points), len(states)), 'model'
            )

        grid_size = reader.get('model', 'grid_size', _positive_integer, len(states))

        if grid_size != len(states):
            raise reader.error(
                'grid_size = {} but {} states are given'.format(grid_size, len(states)),
                'model', 'grid_size'
            )
    else:
        grid_size = reader.get(
            'model', 'grid_size', _positive_integer, defaults['grid_size']
        )

    prior_kind = reader.get('prior', 'kind', PriorKind, PriorKind.UNIFORM)
    reader.check_keys('prior', PRIOR_KEYS[prior_kind])

    prior_weights = None

    if prior_kind is PriorKind.EXPLICIT:
        prior_weights = tuple(reader.get('prior', 'weights', parse_number_list))

        if len(prior_weights) != grid_size:
            raise reader.error(
                '{} weights for {} grid points'.format(len(prior_weights), grid_size),
                'prior', 'weights'
            )

    povm_kind = reader.get('povm', 'kind', PovmKind, PovmKind.Z_PRODUCT)

    povm_elements = povm_outcomes = None

    if povm_kind is PovmKind.EXPLICIT:
        reader.check_keys('povm', ('kind',), ('element', 'outcome'))

        povm_elements = tuple(
            _frozen_matrix(m) for m in reader.indexed('povm', 'element', parse_matrix)
        )

        if not povm_elements:
            raise reader.error('explicit POVM needs element_1..element_n', 'povm')

        povm_outcomes = tuple(reader.indexed('povm', 'outcome', str)) or None

        if povm_outcomes is not None and len(povm_outcomes) != len(povm_elements):
            raise reader.error(
                '{} outcome labels for {} elements'.format(
                    len(povm_outcomes), len(povm_elements)
                ),
                'povm'
            )
    else:
        reader.check_keys('povm', ('kind',))

    reader.check_keys('alpha', ALPHA_KEYS)

    result = ScenarioConfig(
        id=reader.get('scenario', 'id', str, default_id),
        seed=reader.get('scenario', 'seed', _seed, DEFAULT_SEED),
        output=reader.get('scenario', 'output', str, None),
        max_dim=reader.get('scenario', 'max_dim', _positive_integer, MAX_DIM),
        n_perturb=reader.get('scenario', 'n_perturb', int, N_PERTURB),
        family=family,
        grid_size=grid_size,
        n_copies=reader.get('model', 'n_copies', _positive_integer, 1),
        m_copies=reader.get('model', 'm_copies', _positive_integer, 1),
        radius=reader.get('model', 'radius', float, defaults.get('radius')),
        mixing=reader.get('model', 'mixing', float, defaults.get('mixing')),
        low=reader.get('model', 'low', float, defaults.get('low')),
        high=reader.get('model', 'high', float, defaults.get('high')),
        states=states,
        points=points,
        prior_kind=prior_kind,
        prior_weights=prior_weights,
        povm_kind=povm_kind,
        povm_elements=povm_elements,
        povm_outcomes=povm_outcomes,
        alphas=reader.get('alpha', 'values', _alphas),
    )

    if result.n_perturb < 0:
        raise reader.error('must be non-negative', 'scenario', 'n_perturb')

    try:
        return validate(result)
    except ValidationError as e:
        section, _, key = (e.key or 'model').partition('.')

        raise ValidationError(
            e.message, key=e.key, position=reader.position(section, key or None)
        )


def _invalid(key, message):
    return ValidationError('{}: {}'.format(key, message), key=key)


def _validate_states(config):
    sizes = set(len(s) for s in config.states)

    if len(sizes) != 1:
        raise _invalid(
            'model',
            'explicit states have different dimensions {}'.format(sorted(sizes))
        )

    for i, state in enumerate(config.states, 1):
        try:
            DensityOperator(np.array(state))
        except OperatorError as e:
            raise _invalid('model.state_{}'.format(i), str(e))


def _validate_povm(config):
    measured_dim = config.dim ** config.n_copies

    for i, element in enumerate(config.povm_elements, 1):
        key = 'povm.element_{}'.format(i)

        if len(element) != measured_dim:
            raise _invalid(
                key, 'POVM elements must act on d^N = {}'.format(measured_dim)
            )

        try:
            HermitianOperator(np.array(element))
        except OperatorError as e:
            raise _invalid(key, str(e))

    if config.povm_outcomes is not None:
        seen = set()

        for i, label in enumerate(config.povm_outcomes, 1):
            if label in seen:
                raise _invalid(
                    'povm.outcome_{}'.format(i),
                    'outcome label {!r} is used more than once'.format(label)
                )

            seen.add(label)

    try:
        validate_povm(
            [np.array(e) for e in config.povm_elements], config.povm_outcomes
        )
    except NotPositive as e:
        raise _invalid('povm.element_{}'.format(e.index + 1), str(e))
    except OperatorError as e:
        raise _invalid('povm', str(e))


def validate(config):
    """ Проверка согласованности конфигурации

    Явно заданные состояния должны быть операторами плотности, веса
    априорного распределения образовывать распределение вероятностей,
    элементы измерения быть положительными с суммой I.

    :raises ValidationError: d^N или d^M больше max_dim, пустой список alpha,
        матрицы разной размерности, нарушены свойства состояний, весов
        или измерения; ``key`` указывает на ключ файла
    :rtype: ScenarioConfig
    """

    if not config.alphas:
        raise _invalid('alpha.values', 'alpha list is empty')

    if config.family is ModelFamily.EXPLICIT:
        _validate_states(config)

    for key in ('n_copies', 'm_copies'):
        copies = getattr(config, key)

        if config.dim ** copies > config.max_dim:
            raise _invalid(
                'model.{}'.format(key),
                'd^{} = {} exceeds max_dim = {}'.format(
                    'N' if key == 'n_copies' else 'M',
                    config.dim ** copies, config.max_dim
                )
            )

    if config.prior_kind is PriorKind.EXPLICIT:
        try:
            Prior(config.prior_weights)
        except InvalidProbability as e:
            raise _invalid('prior.weights', str(e))

    if config.povm_kind is PovmKind.EXPLICIT:
        _validate_povm(config)

    return config


def with_overrides(config, **overrides):
    """ Копия конфигурации с заменой полей (флаги командной строки, серии)

    Значения None пропускаются; результат проверяется заново.
    """

    changes = {k: v for k, v in six.iteritems(overrides) if v is not None}

    if 'alphas' in changes:
        changes['alphas'] = tuple(float(a) for a in changes['alphas'])

    if 'grid_size' in changes and config.family is ModelFamily.EXPLICIT:
        raise ValidationError(
            'grid size of an explicit family is fixed by its states',
            key='model.grid_size'
        )

    if config.prior_kind is PriorKind.EXPLICIT and \
            changes.get('grid_size', config.grid_size) != config.grid_size:
        raise ValidationError(
            'explicit prior weights fix the grid size', key='prior.weights'
        )

    return validate(config._replace(**changes))


def parse_config(path):
    """ Чтение файла сценария

    :param path: путь к файлу или ``builtin:<имя>``
    :raises ParseError: синтаксическая ошибка (файл, строка, столбец)
    :raises ValidationError: нарушено ограничение конфигурации
    :rtype: ScenarioConfig
    """

    if path.startswith(BUILTIN_PREFIX):
        return builtin_config(path[len(BUILTIN_PREFIX):])

    try:
        config = Config('scenario', filename=path)
    except ConfigSyntaxError as e:
        raise ParseError(e.filename, e.line, e.column, e.message)
    except IOError as e:
        raise ValidationError('cannot read {}: {}'.format(path, e.strerror))

    default_id = os.path.splitext(os.path.basename(path))[0]

    return load_config(config, path, default_id)


def builtin_config(name):
    """ Конфигурация встроенного сценария (``s1``, ``diagonal``, ``bell``) """

    try:
        settings = BUILTIN_SETTINGS[name]
    except KeyError:
        raise ValidationError(
            'unknown built-in scenario {!r}, expected one of {}'.format(
                name, ', '.join(sorted(BUILTIN_SETTINGS))
            )
        )

    return load_config(
        MemoryConfig('scenario', settings=settings), BUILTIN_PREFIX + name, name
    )


def build_scenario(config):
    """ :class:`Scenario` по проверенной конфигурации """

    if config.family is ModelFamily.QUBIT_CIRCLE:
        model = ParametricModel.qubit_circle(
            config.grid_size, config.radius, config.mixing,
            config.n_copies, config.m_copies, config.max_dim
        )
    elif config.family is ModelFamily.DIAGONAL:
        model = ParametricModel.diagonal(
            config.grid_size, config.low, config.high,
            config.n_copies, config.m_copies, config.max_dim
        )
    else:
        model = ParametricModel(
            config.points, [np.array(s) for s in config.states],
            config.n_copies, config.m_copies, config.max_dim
        )

    if config.prior_kind is PriorKind.UNIFORM:
        prior = Prior.uniform(len(model))
    else:
        prior = Prior(config.prior_weights)

    elements = None

    if config.povm_elements is not None:
        elements = [np.array(e) for e in config.povm_elements]

    povm = build_povm(
        config.povm_kind, model.dim, model.n_copies, elements, config.povm_outcomes
    )

    return Scenario(
        model, prior, povm, config.alphas,
        name=config.id, seed=config.seed, n_perturb=config.n_perturb
    )
