import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gbtqsim import builtin_case  # noqa: E402


@pytest.fixture(params=range(1, 7), ids=lambda n: f"case{n}")
def case(request):
    workload, alpha = builtin_case(request.param)
    return request.param, workload, alpha


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
