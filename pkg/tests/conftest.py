import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cubetrees import complex_from_file  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def rp2_path():
    return FIXTURES / "rp2.json"


@pytest.fixture(scope="session")
def rp2(rp2_path):
    return complex_from_file(rp2_path)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
