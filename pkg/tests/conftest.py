import json
from pathlib import Path

import pytest


@pytest.fixture(scope="session")
def frozen():
    return json.loads((Path(__file__).parent / "data" / "oracle_frozen.json").read_text())


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
