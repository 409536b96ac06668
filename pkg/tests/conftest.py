import pytest
from hypothesis import HealthCheck, settings

from tests.helpers import MODELS

# fixed seeds: every property suite is reproducible run to run
settings.register_profile(
    "ci", derandomize=True, max_examples=300, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


@pytest.fixture
def models_dir():
    return MODELS
