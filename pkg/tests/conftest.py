import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not _ran_acceptance(terminalreporter):
        return
    terminalreporter.section("acceptance criteria")
    for k in range(1, 10):
        line = module.RESULTS.get(k, f"criterion {k}: FAIL (did not complete)")
        terminalreporter.write_line(line)


def _ran_acceptance(terminalreporter):
    return any(
        "test_acceptance" in report.nodeid
        for reports in terminalreporter.stats.values()
        for report in reports
        if hasattr(report, "nodeid")
    )
