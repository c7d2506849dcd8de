import sys
from importlib.resources import files
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

DATA = files("shadowed_ahp") / "data"

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    key = mark.args
    ok = _criteria.get(key, True)
    if rep.when == "call" or rep.failed:
        _criteria[key] = ok and rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (cid, text), ok in sorted(_criteria.items(), key=lambda kv: int(kv[0][0][2:])):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {cid}  {text}")


@pytest.fixture
def formula_text():
    return (DATA / "supplier_formula.ahp").read_text()


@pytest.fixture
def replay_text():
    return (DATA / "supplier_replay.ahp").read_text()


@pytest.fixture
def formula_path():
    return str(DATA / "supplier_formula.ahp")


@pytest.fixture
def replay_path():
    return str(DATA / "supplier_replay.ahp")
