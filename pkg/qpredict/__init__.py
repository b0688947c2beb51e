# -*- coding: utf-8 -*-
"""
:authors: qpredict contributors
:license: Apache License, Version 2.0, see LICENSE file

:copyright: (c) 2026 qpredict contributors
"""
import logging

from .enums import *
from .exceptions import *
from .divergence import (
    Alpha, ProbabilityVector, classical_alpha_divergence, fidelity,
    quantum_alpha_divergence, relative_entropy, trace_norm, trace_norm_distance
)
from .model import (
    LikelihoodTable, ParametricModel, Posterior, PredictiveOperator, Prior,
    alpha_mixture, classical_alpha_predictive, exchangeable_state,
    likelihood_table, marginal, posterior, predictive_operator
)
from .operators import (
    DensityOperator, HermitianOperator, Povm, matrix_exp, matrix_log,
    matrix_power, tensor_power, tensor_product, validate_povm
)
from .risk import (
    Estimator, RiskReport, average_risk, bayes_estimator, estimator_zoo,
    minimize_posterior_risk, perturbed_estimator, risk_gap_direct,
    risk_gap_identity
)
from .verify import (
    Scenario, scenario_bell, scenario_diagonal, scenario_s1,
    scenario_single_point, verify_theorem
)


__author__ = 'qpredict contributors'
__version__ = '1.0.0'

logging.getLogger('qpredict').addHandler(logging.NullHandler())
