import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from oracles import TABLE_3X3, TWISTED_CUBIC  # noqa: E402

ACCEPTANCE = []


def pytest_collection_modifyitems(config, items):
    if os.environ.get("ATOMFIBER_LONG") == "1":
        return
    skip = pytest.mark.skip(reason="long-running; set ATOMFIBER_LONG=1")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE:
        terminalreporter.write_line(line)


@pytest.fixture
def tc():
    return TWISTED_CUBIC


@pytest.fixture
def t3():
    return TABLE_3X3
