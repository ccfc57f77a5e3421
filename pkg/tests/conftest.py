import pytest

_RESULTS: list[tuple[int, bool, str, str]] = []


@pytest.fixture
def criterion():
    """Record one acceptance criterion: criterion(number, title, ok, detail)."""
    def record(number: int, title: str, ok: bool, detail: str = "") -> bool:
        _RESULTS.append((number, bool(ok), title, detail))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, title, detail in sorted(_RESULTS):
        line = f"{'PASS' if ok else 'FAIL'}  [{number:2d}] {title}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
