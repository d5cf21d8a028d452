import numpy as np
import pytest

from harmap import catalog
from harmap.criteria import SamplingConfig


@pytest.fixture(scope="session")
def cfg():
    """Default sampling resolution, as the verification suite uses."""
    return SamplingConfig()


@pytest.fixture(scope="session")
def cfg_fast():
    """Coarser grid for property tests that sweep many maps."""
    return SamplingConfig(n_theta=1024)


@pytest.fixture(scope="session")
def f0():
    return catalog("f0", 64)


@pytest.fixture(scope="session")
def koebe():
    return catalog("koebe_harmonic", 64)


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240901)
