import pytest

from terracini.sampling import SampleConfig


@pytest.fixture
def cfg():
    return SampleConfig()
