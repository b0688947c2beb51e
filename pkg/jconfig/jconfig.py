# -*- coding: utf-8 -*-
"""
:authors: qpredict contributors
:license: Apache License, Version 2.0, see LICENSE file

:copyright: (c) 2026 qpredict contributors
"""

import io
import re
from collections import OrderedDict

import six

from .base import BaseConfig, ConfigSyntaxError

RE_SECTION = re.compile(r'^\[\s*([A-Za-z_][\w.-]*)\s*\]\s*$')
RE_KEY = re.compile(r'^([A-Za-z_][\w.-]*)\s*=\s*')

COMMENT_PREFIXES = ('#', ';')


class Config(BaseConfig):
    """ Класс конфигурации в файле

    Формат: заголовки секций ``[секция]``, строки ``ключ = значение``,
    комментарии с ``#`` или ``;`` в начале строки. Строка, начинающаяся
    с пробела, продолжает значение предыдущего ключа.
    Для каждого ключа запоминается позиция значения (строка, столбец).

    :param section: имя текущей секции
    :param filename: имя файла
    :param missing_ok: при отсутствии файла начать с пустой конфигурации
    """

    __slots__ = ('_filename',)

    def __init__(self, section, filename='.jconfig', missing_ok=False):
        self._filename = filename

        super(Config, self).__init__(
            section, filename=filename, missing_ok=missing_ok
        )

    @property
    def filename(self):
        return self._filename

    def load(self, filename, missing_ok=False, **kwargs):
        try:
            with io.open(filename, 'r', encoding='utf-8') as f:
                text = f.read()
        except IOError:
            if missing_ok:
                return OrderedDict()
            raise

        return self.parse(text, filename)

    def parse(self, text, filename='<string>'):
        settings = OrderedDict()
        section = None
        last_key = None

        for line_no, raw in enumerate(text.splitlines(), 1):
            stripped = raw.strip()

            if not stripped or stripped.startswith(COMMENT_PREFIXES):
                continue

            if raw[0].isspace():
                if last_key is None:
                    raise ConfigSyntaxError(
                        filename, line_no, 1,
                        'continuation line without a preceding key'
                    )

                values = settings[section]
                values[last_key] = '{} {}'.format(values[last_key], stripped).strip()
                continue

            match = RE_SECTION.match(stripped)

            if match:
                section = match.group(1)
                last_key = None

                if section in settings:
                    raise ConfigSyntaxError(
                        filename, line_no, 1,
                        'duplicate section [{}]'.format(section)
                    )

                settings[section] = OrderedDict()
                self._positions[(section, None)] = (line_no, 1)
                continue

            if stripped.startswith('['):
                raise ConfigSyntaxError(
                    filename, line_no, 1, 'malformed section header'
                )

            match = RE_KEY.match(raw)

            if not match:
                raise ConfigSyntaxError(
                    filename, line_no, 1, "expected 'key = value'"
                )

            if section is None:
                raise ConfigSyntaxError(
                    filename, line_no, 1,
                    'key {!r} outside of any section'.format(match.group(1))
                )

            key = match.group(1)

            if key in settings[section]:
                raise ConfigSyntaxError(
                    filename, line_no, 1,
                    'duplicate key {!r} in [{}]'.format(key, section)
                )

            settings[section][key] = raw[match.end():].strip()
            self._positions[(section, key)] = (line_no, match.end() + 1)
            last_key = key

        return settings

    def save(self):
        lines = []

        for section, values in six.iteritems(self._settings):
            if lines:
                lines.append('')

            lines.append('[{}]'.format(section))
            lines.extend(
                '{} = {}'.format(key, value) for key, value in six.iteritems(values)
            )

        with io.open(self._filename, 'w', encoding='utf-8') as f:
            f.write(six.text_type('\n'.join(lines) + '\n'))
