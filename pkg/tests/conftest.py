import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from rqeqa.classifier import EntailmentModel
from rqeqa.collection import load_collection
from rqeqa.index import build_index
from rqeqa.resources import data_path, default_resources

GOLDEN = Path(__file__).resolve().parent / "golden"


def golden(name):
    return json.loads((GOLDEN / name).read_text("utf-8"))


@pytest.fixture(scope="session")
def resources():
    return default_resources()


@pytest.fixture(scope="session")
def sample(resources):
    return load_collection(data_path("sample_collection.json"))


@pytest.fixture(scope="session")
def sample_index(sample, resources):
    return build_index(sample, resources)


@pytest.fixture(scope="session")
def ref_model():
    return EntailmentModel.load(data_path("reference_model.txt"))


@pytest.fixture(scope="session")
def env():
    import oracles
    return oracles.Env()


_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or report.outcome in ("skipped", "failed"):
        name = report.nodeid.split("::")[-1]
        detail = dict(report.user_properties).get("measured", "")
        if report.skipped and isinstance(report.longrepr, tuple):
            detail = report.longrepr[2]
        prev = _acceptance.get(name)
        if prev is None or prev[0] == "PASS":
            _acceptance[name] = ("SKIP" if report.skipped else "PASS" if report.passed else "FAIL", detail)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance, key=lambda n: int(n.split("_")[2])):
        status, detail = _acceptance[name]
        terminalreporter.write_line(f"{status:<4}  {name}  {detail}")
