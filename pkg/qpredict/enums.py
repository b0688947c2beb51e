# -*- coding: utf-8 -*-
"""
:authors: qpredict contributors
:license: Apache License, Version 2.0, see LICENSE file

:copyright: (c) 2026 qpredict contributors
"""

from enum import Enum, IntEnum


class ExitStatus(IntEnum):
    """ Коды завершения командной строки """

    #: Все проверки прошли
    OK = 0

    #: Ошибка в аргументах или в файле сценария
    USAGE_ERROR = 1

    #: Нарушено хотя бы одно утверждение теоремы
    VERIFICATION_FAILED = 2


class ModelFamily(Enum):
    """ Встроенные параметрические семейства состояний """

    #: Кубиты на окружности в плоскости xy, подмешанные к I/2
    QUBIT_CIRCLE = 'qubit_circle'

    #: Диагональные (коммутирующие) состояния diag(t, 1 - t)
    DIAGONAL = 'diagonal'

    #: Состояния заданы матрицами в файле сценария
    EXPLICIT = 'explicit'


class PovmKind(Enum):
    """ Встроенные измерения """

    #: Проекторы вычислительного базиса на d^N
    Z_PRODUCT = 'z_product'

    #: Базис Белла на двух кубитах (запутанное измерение)
    BELL = 'bell'

    #: Неинформативное измерение {I}
    TRIVIAL = 'trivial'

    #: Шестиисходное измерение Паули на каждом кубите
    PAULI6_PRODUCT = 'pauli6_product'

    #: Элементы заданы матрицами в файле сценария
    EXPLICIT = 'explicit'


class PriorKind(Enum):
    """ Способ задания априорного распределения """

    UNIFORM = 'uniform'
    EXPLICIT = 'explicit'


class SweepKey(Enum):
    """ Параметры, по которым можно построить серию запусков """

    #: Значение alpha
    ALPHA = 'alpha'

    #: Число измеряемых копий N
    N = 'N'

    #: Размер сетки параметра K
    K = 'K'
