# -*- coding: utf-8 -*-
"""
:authors: qpredict contributors
:license: Apache License, Version 2.0, see LICENSE file

:copyright: (c) 2026 qpredict contributors
"""

import csv
import io
import logging
import sys
import time
from collections import namedtuple

import numpy as np
import six

from .config import build_scenario, with_overrides
from .enums import ExitStatus, SweepKey
from .exceptions import ValidationError
from .utils import format_number
from .verify import verify_alpha

CSV_HEADER = (
    'scenario', 'alpha', 'estimator', 'risk', 'bayes_risk', 'gap_direct',
    'gap_identity', 'residual', 'opt_trace_dist', 'wall_time_s'
)

ResultRow = namedtuple('ResultRow', CSV_HEADER)

RunResult = namedtuple('RunResult', ['rows', 'failures', 'status'])

#: Допуск при проверке монотонности байесовского риска по N
MONOTONICITY_SLACK = 1e-9

logger = logging.getLogger('qpredict')


def run_iter(config, inject_suboptimal_bayes=False, timing=True):
    """ Проверка сценария по блокам: для каждого alpha по возрастанию
    возвращает (строки результата, нарушения)

    :param config: :class:`ScenarioConfig`
    :param inject_suboptimal_bayes: тестовый хук, портит байесовский оператор
    :param timing: записывать время блока в ``wall_time_s`` (иначе 0)
    """

    scenario = build_scenario(config)

    for alpha in scenario.alphas:
        start = time.perf_counter()
        reports, failures = verify_alpha(scenario, alpha, inject_suboptimal_bayes)
        elapsed = time.perf_counter() - start if timing else 0.0

        rows = [
            ResultRow(
                config.id, r.alpha, r.estimator, r.risk, r.bayes_risk,
                r.gap_direct, r.gap_identity, r.residual, r.opt_trace_dist,
                elapsed
            )
            for r in reports
        ]

        yield rows, failures


def run(config, inject_suboptimal_bayes=False, timing=True):
    """ Проверка сценария по всем alpha

    :rtype: RunResult
    """

    rows = []
    failures = []

    for block_rows, block_failures in run_iter(
            config, inject_suboptimal_bayes, timing):
        rows.extend(block_rows)
        failures.extend(block_failures)

    status = ExitStatus.VERIFICATION_FAILED if failures else ExitStatus.OK

    return RunResult(rows, failures, status)


def _sweep_override(config, vary, value, labelled):
    if vary is SweepKey.ALPHA:
        return with_overrides(config, alphas=(value,))

    if float(value) != int(value):
        raise ValidationError(
            'sweep over {} needs integer values, got {!r}'.format(vary.value, value)
        )

    value = int(value)
    scenario_id = '{}/{}={}'.format(config.id, vary.value, value) if labelled else None

    if vary is SweepKey.N:
        return with_overrides(config, n_copies=value, id=scenario_id)

    return with_overrides(config, grid_size=value, id=scenario_id)


def sweep_iter(config, vary, values, inject_suboptimal_bayes=False, timing=True):
    """ Серия запусков: для каждого значения ``values`` параметра ``vary``
    возвращает (значение, :class:`RunResult`)

    При серии по N или K идентификатор сценария дополняется значением
    (``s1/N=2``), если значений больше одного.

    :param vary: :class:`SweepKey` или его строковое значение
    """

    vary = SweepKey(vary)
    values = list(values)

    if not values:
        raise ValidationError('sweep needs at least one value')

    labelled = len(values) > 1

    for value in values:
        block = _sweep_override(config, vary, value, labelled)
        yield value, run(block, inject_suboptimal_bayes, timing)


def sweep(config, vary, values, inject_suboptimal_bayes=False, timing=True):
    """ Серия запусков, объединенная в один :class:`RunResult`

    Для серии по N в лог пишется, убывает ли байесовский риск с ростом N.
    """

    vary = SweepKey(vary)

    rows = []
    failures = []
    blocks = []

    for value, result in sweep_iter(
            config, vary, values, inject_suboptimal_bayes, timing):
        rows.extend(result.rows)
        failures.extend(result.failures)
        blocks.append((value, result.rows))

    if vary is SweepKey.N:
        _note_monotonicity(blocks)

    status = ExitStatus.VERIFICATION_FAILED if failures else ExitStatus.OK

    return RunResult(rows, failures, status)


def _note_monotonicity(blocks):
    risks = {}

    for n, rows in sorted(blocks, key=lambda b: b[0]):
        for row in rows:
            risks.setdefault(row.alpha, {})[n] = row.bayes_risk

    for alpha, by_n in sorted(six.iteritems(risks)):
        values = np.array([by_n[n] for n in sorted(by_n)])

        if np.all(np.diff(values) <= MONOTONICITY_SLACK):
            logger.info('alpha=%s: bayes risk is nonincreasing in N', alpha)
        else:
            logger.warning(
                'alpha=%s: bayes risk is not monotone in N: %s',
                alpha, ', '.join(format_number(v) for v in values)
            )


def _csv_value(value):
    if isinstance(value, six.string_types):
        return value

    return format_number(value)


def write_csv(rows, f):
    """ Запись строк результата в поток в формате CSV

    Числа записываются с 17 значащими цифрами.
    """

    writer = csv.DictWriter(f, fieldnames=CSV_HEADER, lineterminator='\n')
    writer.writeheader()

    for row in rows:
        writer.writerow({k: _csv_value(v) for k, v in zip(CSV_HEADER, row)})


def save_csv(rows, path=None):
    """ Запись результата в файл ``path`` или в stdout """

    if path is None:
        write_csv(rows, sys.stdout)
        return

    with io.open(path, 'w', encoding='utf-8', newline='') as f:
        write_csv(rows, f)
