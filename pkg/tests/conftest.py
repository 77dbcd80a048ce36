import pytest

from k12sigma import codes as cd
from k12sigma import f3
from k12sigma import permgroup as pg
from k12sigma import sigma as sg


@pytest.fixture(scope="session")
def k12():
    return cd.k12()


@pytest.fixture(scope="session")
def k12_model(k12):
    return sg.build_E_K12(k12)


@pytest.fixture(scope="session")
def k12_group(k12_model):
    return pg.bsgs(k12_model.sigma, seed=0)


@pytest.fixture(scope="session")
def line_group():
    return f3.reflection_group(f3.quad_space(8, -1), 1, on="lines", seed=1)


@pytest.fixture(scope="session")
def phi_result(k12_model):
    return f3.phi_correspondence(k12_model)


@pytest.fixture(scope="session")
def tensor_models():
    return {name: sg.build_E_tensor(name) for name in ("A1", "A2", "A3", "D4")}
