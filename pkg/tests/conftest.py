import pytest

CRITERIA = {}


@pytest.fixture
def criterion():
    """Record the outcome of an acceptance criterion: ``criterion(num, ok, detail)``."""
    def record(num, ok, detail=""):
        CRITERIA[num] = (ok, detail)
        line = f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        ok, detail = CRITERIA[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
