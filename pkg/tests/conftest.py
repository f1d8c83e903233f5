from pathlib import Path

import pytest

from fangvp import IndexPoset, Objective, PseudometricFamily, ScalingMap, VariationalInstance

FIXTURES = Path(__file__).parent / "fixtures"

D_ALPHA = ((0, 1, 2), (1, 0, 1), (2, 1, 0))
D_BETA = tuple(tuple(2 * v for v in row) for row in D_ALPHA)


@pytest.fixture
def ex1_family():
    return PseudometricFamily(3, IndexPoset.chain(2, ["alpha", "beta"]), (D_ALPHA, D_BETA))


@pytest.fixture
def ex1_phi():
    return Objective((3, 1, 0))


@pytest.fixture
def ex1_alpha():
    return PseudometricFamily.single(D_ALPHA)


@pytest.fixture
def ex1_instance(ex1_family, ex1_phi):
    return VariationalInstance(ex1_family, ex1_phi, ScalingMap((1, 2)), 0)


@pytest.fixture
def ex1_path():
    return FIXTURES / "ex1.json"
