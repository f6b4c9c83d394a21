import pytest

_ACCEPTANCE: list[tuple[str, str, str]] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion; the outcome is filled in by the report hook."""

    def record(label: str, detail: str = "") -> None:
        request.node._criterion = (label, detail)

    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    label = getattr(item, "_criterion", None)
    if label is None or rep.when != "call":
        return
    _ACCEPTANCE.append(("PASS" if rep.passed else "FAIL", *label))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for status, label, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{status}  {label}" + (f"  ({detail})" if detail else ""))
