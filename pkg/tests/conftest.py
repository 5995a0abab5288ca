import pytest

# filled by tests/test_acceptance.py, printed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_line():
    def record(number, title, ok, elapsed, limit, detail=""):
        status = "PASS" if ok else "FAIL"
        timing = f"{elapsed:.2f}s / {limit:g}s"
        line = f"[{status}] criterion {number}: {title} ({timing})"
        if detail:
            line += f" - {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
    return record
