import pytest


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", "call") != "call" or "test_acceptance" not in rep.nodeid:
                continue
            lines.append((rep.nodeid.split("::")[-1], outcome))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, outcome in sorted(lines):
            mark = "PASS" if outcome == "passed" else "FAIL"
            terminalreporter.write_line(f"[{mark}] {name}")
