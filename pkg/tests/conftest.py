import pytest

from quasibraid import fixtures
from quasibraid.exactlin import QQ


@pytest.fixture(scope="session")
def field():
    return QQ


@pytest.fixture(scope="session")
def s3():
    return fixtures.s3()


@pytest.fixture(scope="session")
def o16():
    return fixtures.o16()


@pytest.fixture(scope="session")
def hq_c2():
    return fixtures.hq_c2()


@pytest.fixture(scope="session")
def hq_c3():
    return fixtures.hq_c3()


@pytest.fixture(scope="session")
def hq_s3():
    return fixtures.hq_s3()


@pytest.fixture(scope="session")
def hq_o16():
    return fixtures.hq_o16()


@pytest.fixture(scope="session")
def gchq_trivial_c2():
    return fixtures.gchq_trivial_c2()


@pytest.fixture(scope="session")
def gchq_s3():
    return fixtures.gchq_s3()


@pytest.fixture(scope="session")
def gchq_power():
    return fixtures.gchq_power()


@pytest.fixture(scope="session")
def yd_crossed_s3(gchq_s3):
    from quasibraid.yd import crossed_set_module

    return crossed_set_module(gchq_s3)
