import pytest

from coverdeal import HFamilySpec, build_h_graph


def ex16_spec():
    return HFamilySpec(11, (2, 6, 8, 11), {2: [1], 6: [3, 4, 5], 8: [7], 11: [9, 10]})


def ex29_spec():
    return HFamilySpec(6, (2, 4, 6), {2: [1], 4: [3], 6: [5]})


@pytest.fixture
def ex16():
    return ex16_spec()


@pytest.fixture
def ex29():
    return ex29_spec()


@pytest.fixture
def ex16_graph():
    return build_h_graph(ex16_spec())


@pytest.fixture
def ex29_graph():
    return build_h_graph(ex29_spec())


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py" in getattr(rep, "nodeid", "") and rep.when == "call":
                lines.append((rep.nodeid.split("::")[-1], outcome))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(lines):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
