import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from listbatch.offline import build_opt_table  # noqa: E402


@pytest.fixture(scope="session")
def opt3000():
    return build_opt_table(3000)


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE_LINES

    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
