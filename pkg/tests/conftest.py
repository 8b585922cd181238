import os

import pytest
from hypothesis import HealthCheck, settings

from euclid_kernel.field.backend import CONSTRUCTIBLE, get_backend

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    derandomize=True,
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def F():
    return CONSTRUCTIBLE


@pytest.fixture
def P():
    return get_backend("puiseux", 8)


@pytest.fixture
def Bd():
    return get_backend("puiseux-bounded", 8)


@pytest.fixture(params=["constructible", "puiseux", "puiseux-bounded"])
def backend(request):
    return get_backend(request.param, 8)


_ACCEPTANCE = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and report.when == "call":
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _ACCEPTANCE[item.name] = (report.passed, doc)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE, key=lambda n: int(n.split("_")[2])):
        ok, doc = _ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name[5:]}: {doc}")
