import pytest

from wrag import SimpleGraph

# Edge lists transcribed from the two worked examples of the construction.
EXAMPLE_4_7_EDGES = [
    (0, 1), (1, 2), (0, 2), (2, 3), (0, 3), (3, 1),
    (4, 0), (4, 1), (4, 2),
    (5, 0), (5, 4), (5, 1),
    (6, 3), (6, 0), (6, 2),
]
EXAMPLE_5_9_EDGES = [
    (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1),
    (5, 0), (5, 1), (5, 2),
    (6, 0), (6, 3), (6, 2),
    (7, 0), (7, 3), (7, 4),
    (8, 0), (8, 1), (8, 4),
]

_criteria: dict[int, tuple[str, list[str]]] = {}
_notes: list[str] = []


@pytest.fixture
def example_4_7_graph():
    return SimpleGraph(7, EXAMPLE_4_7_EDGES)


@pytest.fixture
def example_5_9_graph():
    return SimpleGraph(9, EXAMPLE_5_9_EDGES)


@pytest.fixture
def record_note():
    """Lets acceptance tests leave a line in the terminal summary."""
    return _notes.append


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    number, title = getattr(report, "criterion", (None, None))
    if number is None:
        return
    _criteria.setdefault(number, (title, []))[1].append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = tuple(marker.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcomes = _criteria[number]
        status = "PASS" if outcomes and all(o == "passed" for o in outcomes) else "FAIL"
        tr.write_line(f"criterion {number}: {status}  {title}  ({len(outcomes)} test(s))")
    for note in _notes:
        tr.write_line(f"note: {note}")
