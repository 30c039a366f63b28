import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from fishtamari import config  # noqa: E402
from fishtamari.dyck import dyck_paths  # noqa: E402
from fishtamari.tamari import intervals  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

PATHS = {n: list(dyck_paths(n)) for n in range(8)}
INTERVALS = {n: list(intervals(n)) for n in range(7)}


def paths_up_to(n):
    return st.integers(0, n).flatmap(lambda k: st.sampled_from(PATHS[k]))


def intervals_up_to(n):
    return st.integers(0, n).flatmap(lambda k: st.sampled_from(INTERVALS[k]))


@pytest.fixture(autouse=True)
def _fresh_config():
    config.set_config(config.Config())
    yield
    config.set_config(None)


_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = report.outcome
    elif "test_acceptance.py" in report.nodeid and report.failed:
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = "failed"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        verdict = "PASS" if _ACCEPTANCE[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
