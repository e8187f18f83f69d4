import pytest

from arctangr import ArctanGRParams, ingest


@pytest.fixture(scope="session")
def insurance():
    return ingest("embedded:insurance")


@pytest.fixture(scope="session")
def unit_params():
    return ArctanGRParams(omega=0.0, psi=1.0)


@pytest.fixture(scope="session")
def table_params():
    # the location/scale pair used for the published risk grid
    return ArctanGRParams(omega=0.02, psi=0.005)
