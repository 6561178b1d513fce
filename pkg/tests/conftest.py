import sys


def pytest_terminal_summary(terminalreporter):
    """Print one PASS/FAIL line per acceptance criterion that ran."""
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(acceptance.RESULTS):
        title, ok, detail = acceptance.RESULTS[num]
        terminalreporter.write_line(acceptance.format_result(num, title, ok, detail))
