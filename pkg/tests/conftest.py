import sys
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from ribbonstat.partitions import Partition  # noqa: E402

# enumeration-heavy properties have uneven run times; rely on pytest for hangs
settings.register_profile("ribbonstat", deadline=None)
settings.load_profile("ribbonstat")


@st.composite
def partitions(draw, max_parts=6, max_part=6):
    parts = draw(st.lists(st.integers(1, max_part), max_size=max_parts))
    return Partition(sorted(parts, reverse=True))


@pytest.fixture
def p222():
    return Partition([2, 2, 2])


@pytest.fixture
def p654222():
    return Partition([6, 5, 4, 2, 2, 2])


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
