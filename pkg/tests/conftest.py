from importlib import resources

import pytest

from legendre_pairs.cli import CATALOGS, parse_sequence_text
from legendre_pairs.fixtures import load_fixture

ACCEPTANCE_LINES = []


def catalog(which):
    text = resources.files("legendre_pairs").joinpath("data", CATALOGS[which]).read_text()
    return parse_sequence_text(text, CATALOGS[which])


@pytest.fixture(scope="session")
def char_pairs():
    return catalog(1)


@pytest.fixture(scope="session")
def lift_pairs():
    return catalog(2)


@pytest.fixture(scope="session")
def pinned_fields():
    return load_fixture("pinned")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
