# -*- coding: utf-8 -*-
"""
:authors: qpredict contributors
:license: Apache License, Version 2.0, see LICENSE file

:copyright: (c) 2026 qpredict contributors
"""


class QPredictError(Exception):
    pass


class OperatorError(QPredictError):
    pass


class NonHermitian(OperatorError):

    def __init__(self, deviation, tol):
        super(NonHermitian, self).__init__()

        self.deviation = deviation
        self.tol = tol

    def __str__(self):
        return 'Matrix is not Hermitian: max |A - A^H| = {:.3e} > {:.0e}'.format(
            self.deviation, self.tol
        )


class NotPositive(OperatorError):

    def __init__(self, eigenvalue, index=None):
        super(NotPositive, self).__init__()

        self.eigenvalue = eigenvalue
        self.index = index

    def __str__(self):
        where = '' if self.index is None else ' (element {})'.format(self.index)

        return 'Operator is not positive semidefinite{}: eigenvalue {:.3e}'.format(
            where, self.eigenvalue
        )


class NotComplete(OperatorError):

    def __init__(self, deviation):
        super(NotComplete, self).__init__()

        self.deviation = deviation

    def __str__(self):
        return 'POVM elements do not sum to identity: max deviation {:.3e}'.format(
            self.deviation
        )


class NotNormalized(OperatorError):

    def __init__(self, trace):
        super(NotNormalized, self).__init__()

        self.trace = trace

    def __str__(self):
        return 'Density operator must have unit trace, got {!r}'.format(
            self.trace
        )


class DuplicateOutcome(OperatorError, ValueError):

    def __init__(self, outcome):
        super(DuplicateOutcome, self).__init__()

        self.outcome = outcome

    def __str__(self):
        return 'POVM outcome label {!r} is used more than once'.format(self.outcome)


class InvalidCopies(OperatorError, ValueError):

    def __init__(self, copies):
        super(InvalidCopies, self).__init__()

        self.copies = copies

    def __str__(self):
        return 'Number of copies must be a positive integer, got {!r}'.format(
            self.copies
        )


class DimensionMismatch(OperatorError):
    pass


class DimensionOverflow(OperatorError):

    def __init__(self, dim, max_dim):
        super(DimensionOverflow, self).__init__()

        self.dim = dim
        self.max_dim = max_dim

    def __str__(self):
        return 'Dimension {} exceeds max_dim = {}'.format(self.dim, self.max_dim)


class SingularPower(OperatorError):

    def __init__(self, power, eigenvalue):
        super(SingularPower, self).__init__()

        self.power = power
        self.eigenvalue = eigenvalue

    def __str__(self):
        return 'Negative power {} of a singular operator (eigenvalue {:.3e})'.format(
            self.power, self.eigenvalue
        )


class SingularLog(OperatorError):

    def __init__(self, eigenvalue):
        super(SingularLog, self).__init__()

        self.eigenvalue = eigenvalue

    def __str__(self):
        return 'Logarithm of a singular operator (eigenvalue {:.3e})'.format(
            self.eigenvalue
        )


class NumericalError(QPredictError):
    pass


class ComplexTrace(NumericalError):

    def __init__(self, value):
        super(ComplexTrace, self).__init__()

        self.value = value

    def __str__(self):
        return 'Trace has a non-negligible imaginary part: {!r}'.format(self.value)


class NonPositiveNormalizer(NumericalError):

    def __init__(self, normalizer):
        super(NonPositiveNormalizer, self).__init__()

        self.normalizer = normalizer

    def __str__(self):
        return 'alpha-mixture has non-positive trace {!r}'.format(self.normalizer)


class InvalidAlpha(QPredictError, ValueError):
    pass


class InvalidProbability(QPredictError, ValueError):
    pass


class SupportMismatch(QPredictError):

    def __init__(self, message, grid_index=None, outcome=None):
        super(SupportMismatch, self).__init__(message)

        self.message = message
        self.grid_index = grid_index
        self.outcome = outcome

    def with_context(self, grid_index=None, outcome=None):
        """ Копия исключения с привязкой к точке сетки и исходу """

        return SupportMismatch(self.message, grid_index, outcome)

    def __str__(self):
        if self.grid_index is None and self.outcome is None:
            return self.message

        return '{} (theta index {}, outcome {!r})'.format(
            self.message, self.grid_index, self.outcome
        )


class ModelError(QPredictError):
    pass


class NegativeProbability(ModelError):

    def __init__(self, grid_index, outcome, value):
        super(NegativeProbability, self).__init__()

        self.grid_index = grid_index
        self.outcome = outcome
        self.value = value

    def __str__(self):
        return 'p({!r}|theta_{}) = {:.3e} is negative'.format(
            self.outcome, self.grid_index, self.value
        )


class ZeroMarginal(ModelError):

    def __init__(self, outcome, marginal):
        super(ZeroMarginal, self).__init__()

        self.outcome = outcome
        self.marginal = marginal

    def __str__(self):
        return 'Outcome {!r} is impossible under the prior (p_x = {:.3e})'.format(
            self.outcome, self.marginal
        )


class SingularState(ModelError):

    def __init__(self, grid_index, alpha):
        super(SingularState, self).__init__()

        self.grid_index = grid_index
        self.alpha = alpha

    def __str__(self):
        return (
            'State theta_{} is rank deficient but alpha = {} needs '
            'a negative power or a logarithm'.format(self.grid_index, self.alpha)
        )


class NonConvergence(QPredictError):

    def __init__(self, iterations, gradient_norm, state=None):
        super(NonConvergence, self).__init__()

        self.iterations = iterations
        self.gradient_norm = gradient_norm
        self.state = state

    def __str__(self):
        return 'Optimizer stopped after {} iterations, |grad| = {:.3e}'.format(
            self.iterations, self.gradient_norm
        )


class VerificationFailure(QPredictError):

    def __init__(self, failures, reports=None):
        super(VerificationFailure, self).__init__()

        self.failures = list(failures)
        self.reports = list(reports or [])

    @property
    def assertion(self):
        return self.failures[0].assertion

    def __str__(self):
        if len(self.failures) == 1:
            return str(self.failures[0])

        return '{} (and {} more)'.format(self.failures[0], len(self.failures) - 1)


class ConfigError(QPredictError):
    pass


class ParseError(ConfigError):

    def __init__(self, filename, line, column, message):
        super(ParseError, self).__init__()

        self.filename = filename
        self.line = line
        self.column = column
        self.message = message

    def __str__(self):
        return '{}:{}:{}: {}'.format(
            self.filename, self.line, self.column, self.message
        )


class ValidationError(ConfigError):

    def __init__(self, message, key=None, position=None):
        super(ValidationError, self).__init__()

        self.message = message
        self.key = key
        self.position = position

    def __str__(self):
        if self.position:
            return '{}:{}: {}'.format(self.position[0], self.position[1], self.message)

        return self.message


class UsageError(QPredictError):
    pass
