import numpy as np
import pytest
from numpy.testing import assert_allclose

from qpredict.exceptions import (
    DimensionMismatch, InvalidAlpha, ModelError, VerificationFailure
)
from qpredict.model import ParametricModel, Prior
from qpredict.povm import bell, z_product
from qpredict.verify import (
    Scenario, scenario_bell, scenario_diagonal, scenario_s1,
    scenario_single_point, verify_theorem
)

ALPHAS = (-2, -1, -0.5, 0, 0.5, 1)


@pytest.mark.parametrize('factory', [scenario_s1, scenario_diagonal, scenario_bell])
def test_theorem_holds(factory):
    reports = verify_theorem(factory(alphas=ALPHAS))

    assert len(reports) == len(ALPHAS) * 35
    assert [r.alpha for r in reports[::35]] == sorted(float(a) for a in ALPHAS)

    for report in reports:
        assert report.gap_direct >= -1e-9
        assert report.residual <= 1e-8
        assert report.opt_trace_dist <= 1e-4
        assert np.isfinite(report.risk)


def test_theorem_formally_holds_beyond_one():
    reports = scenario_s1(alphas=(2,)).verify()

    assert {r.alpha for r in reports} == {2.0}
    assert min(r.gap_direct for r in reports) >= -1e-9


def test_single_point_has_zero_bayes_risk():
    for report in verify_theorem(scenario_single_point()):
        assert report.bayes_risk == pytest.approx(0, abs=1e-10)


def test_s1_measurement_is_uninformative(s1):
    # the family lies in the xy plane, so z-basis counts carry no information
    assert_allclose(s1.table.matrix, 0.25, atol=1e-12)

    for x in s1.povm.outcomes:
        assert_allclose(s1.posterior(x).weights, s1.prior.weights, atol=1e-12)

    for alpha in (-1, 0, 0.5, 1):
        assert_allclose(s1.bayes(alpha)('00').matrix, np.eye(2) / 2, atol=1e-12)


def test_bell_measurement_is_informative():
    scenario = scenario_bell()

    assert np.ptp(scenario.table.column('phi+')) > 0.1


def test_negative_control():
    with pytest.raises(VerificationFailure) as e:
        verify_theorem(scenario_s1(alphas=(0,)), inject_suboptimal_bayes=True)

    assertions = {f.assertion for f in e.value.failures}

    assert 'argmin' in assertions
    assert 'identity' in assertions
    assert len(e.value.reports) == 35
    assert 'violated' in str(e.value)
    assert e.value.assertion == e.value.failures[0].assertion


def test_scenario_logging(mocker):
    info = mocker.patch('logging.Logger.info')

    scenario_s1(alphas=(0,)).verify()

    messages = [call[0][0] for call in info.call_args_list]
    assert any(m.startswith('Scenario') for m in messages)
    assert any(m.startswith('alpha=') for m in messages)


def test_scenario_validation():
    model = ParametricModel.qubit_circle(grid_size=4)

    with pytest.raises(ModelError):
        Scenario(model, prior=Prior.uniform(3))

    with pytest.raises(DimensionMismatch):
        Scenario(model, povm=z_product(2, 1))

    with pytest.raises(InvalidAlpha):
        Scenario(model, alphas=())

    scenario = Scenario(model, povm=bell(), alphas=(1, -1, 1))
    assert scenario.alphas == (-1.0, 1.0)
