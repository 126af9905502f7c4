import pytest

from dp3.calibration import default_scheme


@pytest.fixture(scope="session")
def scheme():
    return default_scheme()
