import pytest
from hypothesis import HealthCheck, settings

from _corpus import corpus

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def small_corpus():
    """Two hundred mixed documents for the cheaper property tests."""
    return corpus(200, seed=1234)
