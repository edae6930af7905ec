"""Session wiring: collect acceptance result lines, print them at the end."""

ACCEPTANCE_BLOCKS = []


def record_acceptance(num, lines):
    ACCEPTANCE_BLOCKS.append((num, tuple(lines)))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_BLOCKS:
        return
    terminalreporter.section("acceptance criteria")
    for _, lines in sorted(ACCEPTANCE_BLOCKS):
        for line in lines:
            terminalreporter.write_line(line)
