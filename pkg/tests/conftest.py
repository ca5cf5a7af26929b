import math

import pytest
from hypothesis import HealthCheck, settings

from ghpkerr.geometry import KerrParams, SpacetimePoint

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# acceptance criterion -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE = {}


@pytest.fixture(scope="session")
def kerr():
    return KerrParams(1.0, 0.5)


@pytest.fixture(scope="session")
def schw():
    return KerrParams(1.0, 0.0)


@pytest.fixture
def eq_point():
    return SpacetimePoint("BL-angular", (0.0, 3.0, math.pi / 2, 1.0))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line("criterion %2d: %s  %s" % (key, "PASS" if ok else "FAIL", detail))
