import math

import pytest

from diracmorse.basis import BasisSpec
from diracmorse.model import ModelParams, UnitSystem
from diracmorse.spectrum import nonrel_limit, solve


@pytest.fixture(scope="session")
def fm_params():
    return ModelParams(V0=6.0, r0=4.0, alpha=0.3, M=0.5, kappa=-1,
                       units=UnitSystem.NaturalFm)


@pytest.fixture(scope="session")
def fm_spec():
    return BasisSpec(N_max=200, b0=0.8, theta=math.radians(70.0))


@pytest.fixture(scope="session")
def fm_solution(fm_params, fm_spec):
    return solve(fm_params, fm_spec)


@pytest.fixture(scope="session")
def fm_nr_solution(fm_params, fm_spec):
    return nonrel_limit(fm_params, fm_spec)


@pytest.fixture(scope="session")
def au_params():
    return ModelParams(V0=10.0, r0=1.0, alpha=2.0, M=1.0, kappa=2,
                       units=UnitSystem.AtomicUnits)


@pytest.fixture(scope="session")
def au_spec():
    return BasisSpec(N_max=200, b0=0.25, theta=math.radians(70.0))


@pytest.fixture(scope="session")
def au_solution(au_params, au_spec):
    return solve(au_params, au_spec)
