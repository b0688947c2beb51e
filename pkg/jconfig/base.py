# -*- coding: utf-8 -*-
"""
:authors: qpredict contributors
:license: Apache License, Version 2.0, see LICENSE file

:copyright: (c) 2026 qpredict contributors
"""


class ConfigSyntaxError(ValueError):
    """ Синтаксическая ошибка в файле конфигурации

    :param filename: имя файла
    :param line: номер строки (с 1)
    :param column: номер столбца (с 1)
    :param message: описание ошибки
    """

    def __init__(self, filename, line, column, message):
        super(ConfigSyntaxError, self).__init__()

        self.filename = filename
        self.line = line
        self.column = column
        self.message = message

    def __str__(self):
        return '{}:{}:{}: {}'.format(
            self.filename, self.line, self.column, self.message
        )


class BaseConfig(object):
    """ Абстрактный базовый класс конфигурации из секций ``ключ = значение``.
    У наследуемых классов должен быть определен `__slots__`

    Атрибуты и элементы объекта — ключи текущей секции.
    Остальные секции доступны через :func:`get_section`.

    :param section: имя текущей секции
    :param \*\*kwargs: будут переданы в :func:`load`
    """

    __slots__ = ('section_name', '_settings', '_section', '_positions')

    def __init__(self, section, **kwargs):
        self.section_name = section

        self._positions = {}
        self._settings = self.load(**kwargs)
        self._section = self._settings.setdefault(section, {})

    def __getattr__(self, name):
        return self._section.get(name)

    __getitem__ = __getattr__

    def __setattr__(self, name, value):
        try:
            super(BaseConfig, self).__setattr__(name, value)
        except AttributeError:
            self._section[name] = value

    __setitem__ = __setattr__

    def __contains__(self, name):
        return name in self._section

    def setdefault(self, k, d=None):
        return self._section.setdefault(k, d)

    def clear_section(self):
        self._section.clear()

    def sections(self):
        """ Имена секций в порядке появления """
        return list(self._settings)

    def get_section(self, name):
        """ Словарь ключей секции ``name`` (пустой, если секции нет) """
        return self._settings.get(name, {})

    def position(self, section, key=None):
        """ (строка, столбец) значения ключа или заголовка секции,
        None для настроек не из файла
        """
        return self._positions.get((section, key))

    def load(self, **kwargs):
        """Абстрактный метод, должен возвращать dict секций с конфигом"""
        raise NotImplementedError

    def save(self):
        """Абстрактный метод, должен сохранять конфиг"""
        raise NotImplementedError
