import pytest

_RESULTS: list[tuple[str, bool, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    label = item.get_closest_marker("criterion")
    if label is None or rep.when != "call":
        return
    detail = item.stash.get(_DETAIL, "")
    _RESULTS.append((label.args[0], rep.passed, detail))


_DETAIL = pytest.StashKey[str]()


@pytest.fixture
def detail(request):
    """Record a short summary string shown next to the criterion result."""

    def _set(text: str) -> None:
        request.node.stash[_DETAIL] = text

    return _set


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion reported in the summary")


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _RESULTS:
        line = f"{'PASS' if ok else 'FAIL'}  {name}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
