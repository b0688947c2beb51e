# -*- coding: utf-8 -*-
"""
:authors: qpredict contributors
:license: Apache License, Version 2.0, see LICENSE file

:copyright: (c) 2026 qpredict contributors
"""

from collections import OrderedDict

import six

from .base import BaseConfig


class MemoryConfig(BaseConfig):
    """ Класс конфигурации в памяти

    Значения приводятся к строкам, как если бы они были прочитаны из файла.

    :param settings: dict вида {секция: {ключ: значение}}
    """

    __slots__ = tuple()

    def load(self, settings=None, **kwargs):
        loaded = OrderedDict()

        for section, values in six.iteritems(settings or {}):
            loaded[section] = OrderedDict(
                (key, value if isinstance(value, six.string_types) else str(value))
                for key, value in six.iteritems(values)
            )

        return loaded

    def save(self):
        pass
