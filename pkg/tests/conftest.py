import os

import numpy as np
import pytest

from qpredict import scenario_s1


@pytest.fixture
def rng():
    return np.random.default_rng(20261018)


@pytest.fixture(scope='session')
def s1():
    return scenario_s1()


@pytest.fixture
def scenarios_dir():
    return os.path.join(os.path.dirname(os.path.dirname(__file__)), 'scenarios')
