# -*- coding: utf-8 -*-
"""
:authors: qpredict contributors
:license: Apache License, Version 2.0, see LICENSE file

:copyright: (c) 2026 qpredict contributors
"""

import logging
import re
import sys

import numpy as np
import six

DEFAULT_SEED = 0x5EED0F1A2B3C4D5E

RE_LIST_SEPARATOR = re.compile(r'[\s,]+')


def format_number(value):
    """ Число с 17 значащими цифрами (точный round-trip для double) """
    return '{:.17g}'.format(float(value))


def parse_number_list(text):
    """ Разбор списка чисел, разделенных запятыми и/или пробелами

    :param text: строка вида ``-1, 0, 0.5``
    :rtype: list of float
    """

    text = text.strip()

    if not text:
        return []

    return [float(i) for i in RE_LIST_SEPARATOR.split(text) if i]


def make_rng(seed=None):
    """ Генератор случайных чисел numpy с 64-битным зерном """

    if seed is None:
        seed = DEFAULT_SEED

    return np.random.default_rng(int(seed) & 0xFFFFFFFFFFFFFFFF)


def outcome_label(value):
    if isinstance(value, six.string_types):
        return value

    return str(value)


def enable_debug_mode(level=logging.DEBUG, stream=None):
    """ Включает режим отладки: вывод сообщений лога qpredict в stderr

    :param level: уровень логирования
    :param stream: поток для вывода (по умолчанию sys.stderr)
    """

    logger = logging.getLogger('qpredict')

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))

    logger.setLevel(level)
    logger.addHandler(handler)

    return handler
