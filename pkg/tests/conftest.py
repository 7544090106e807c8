from pathlib import Path

import numpy as np
import pytest

from ptmc.code_core import parse_matrix

DATA = Path(__file__).parent / "data"


def load_fixture(name: str) -> np.ndarray:
    return parse_matrix((DATA / name).read_text())


@pytest.fixture
def fixture_matrix():
    return load_fixture


@pytest.hookimpl(wrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    rep = yield
    if rep.when == "call":
        item.rep_call = rep
    return rep


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
