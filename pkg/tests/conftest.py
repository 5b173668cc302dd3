import pytest

from slackmat import Budget, Matroid, PointConfiguration, QQ
from slackmat.examples import load_example, _meta


@pytest.fixture(scope="session")
def m4():
    matroid, data = load_example("m4")
    return matroid, _meta(data), data


@pytest.fixture(scope="session")
def fano():
    matroid, data = load_example("fano")
    return matroid, _meta(data), data


@pytest.fixture(scope="session")
def nonfano():
    matroid, data = load_example("nonfano")
    return matroid, _meta(data), data


@pytest.fixture(scope="session")
def vamos():
    matroid, data = load_example("vamos")
    return matroid, _meta(data), data


@pytest.fixture(scope="session")
def m8():
    matroid, data = load_example("m8")
    return matroid, _meta(data), data


@pytest.fixture(scope="session")
def perles():
    matroid, data = load_example("perles")
    return matroid, _meta(data), data


@pytest.fixture(scope="session")
def u23():
    return load_example("u23")[0]


@pytest.fixture(scope="session")
def u24():
    return load_example("u24")[0]


@pytest.fixture(scope="session")
def m4_realization(m4):
    _, _, data = m4
    return PointConfiguration.from_json(data["realization"])
