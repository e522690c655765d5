import csv
import pathlib

import pytest

GOLDEN = pathlib.Path(__file__).parent / "golden"


def read_golden(name):
    with (GOLDEN / name).open(newline="") as fh:
        return list(csv.DictReader(fh))


@pytest.fixture(scope="session")
def table1():
    return read_golden("table1.csv")


@pytest.fixture(scope="session")
def table2():
    return read_golden("table2.csv")


@pytest.fixture(scope="session")
def figure1():
    return [(int(r["m"]), int(r["s"]), int(r["d"])) for r in read_golden("figure1.csv")]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
