import cmath
import math
import os
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from centropy.weyl import BesselHalf, BesselThreeHalf, FunctionModel  # noqa: E402

settings.register_profile("default", max_examples=100, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("quick", max_examples=20, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def half():
    return BesselHalf()


@pytest.fixture(scope="session")
def three_half():
    return BesselThreeHalf()


@pytest.fixture(scope="session", params=["half", "three_half"])
def example_model(request):
    return BesselHalf() if request.param == "half" else BesselThreeHalf()


def stieltjes_model(c, s, r, t):
    """m(z) = c - i s sqrt(z) + r/(z - t): Im m < 0 on the upper half-plane, m(-0) = c - r/t."""
    def m(z):
        return c - 1j * s * cmath.sqrt(z) + r / (z - t)
    return FunctionModel(m, c - r / t, name=f"c={c:.3g},s={s:.3g},r={r:.3g},t={t:.3g}")


finite = dict(allow_nan=False, allow_infinity=False)

models = st.builds(
    stieltjes_model,
    c=st.floats(-3, 3, **finite),
    s=st.floats(0.1, 3, **finite),
    r=st.floats(0, 3, **finite),
    t=st.floats(0.2, 5, **finite),
)

# upper half-plane points kept away from the real axis
upper = st.builds(complex, st.floats(-4, 4, **finite), st.floats(0.05, 4, **finite))
dissipative_h = st.builds(complex, st.floats(-4, 4, **finite), st.floats(0.01, 4, **finite))
mus = st.one_of(st.just(math.inf), st.floats(-10, 10, **finite))
