"""Shared pytest wiring: surface the acceptance verdict lines.

The acceptance module records one PASS/FAIL line per criterion as it
runs; printing them from inside the tests would be swallowed by output
capture, so they are replayed here as a terminal-summary section.
"""

import sys


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "VERDICTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
