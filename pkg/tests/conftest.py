import os
import re
import sys

sys.path.insert(0, os.path.dirname(__file__))

import acceptance_log  # noqa: E402


def pytest_terminal_summary(terminalreporter):
    if not acceptance_log.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, text, ok in sorted(acceptance_log.RESULTS, key=lambda r: (int(re.match(r"\d+", r[0]).group()), r[0])):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  [{label}] {text}")
