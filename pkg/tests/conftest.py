"""Shared test plumbing: acceptance-criterion reporting.

Each acceptance test records a one-line PASS/FAIL summary; pytest captures
stdout of passing tests, so the lines are replayed in the terminal summary
where they are always visible.
"""

ACCEPTANCE_LINES = []


def record_criterion(line: str):
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
