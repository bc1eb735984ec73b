import re

import pytest

from pathhopf import PathSpace, load_fixture


@pytest.fixture(scope="session")
def a2():
    return PathSpace(load_fixture("a2"))


@pytest.fixture(scope="session")
def a3():
    return PathSpace(load_fixture("a3"))


@pytest.fixture(scope="session")
def a4():
    return PathSpace(load_fixture("a4"))


@pytest.fixture(scope="session")
def d4():
    return PathSpace(load_fixture("d4"))


@pytest.fixture(scope="session")
def tri():
    """The affine triangle graph (beta = 2)."""
    return PathSpace(load_fixture("a_aff_2"))


# Summarize the acceptance suite with one visible pass/fail line per
# criterion, whatever pytest flags are in use.
_criterion_pattern = re.compile(r"test_acceptance\.py::test_(criterion_\d+[a-z_0-9]*)")
_criterion_outcomes = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    match = _criterion_pattern.search(report.nodeid)
    if match:
        _criterion_outcomes[match.group(1)] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criterion_outcomes:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    def sort_key(name):
        digits = re.search(r"\d+", name)
        return (int(digits.group()) if digits else 0, name)
    for name in sorted(_criterion_outcomes, key=sort_key):
        outcome = _criterion_outcomes[name]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {name}: {status}")
