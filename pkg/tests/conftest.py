import pytest


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n): acceptance criterion number")
    config._acceptance = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    n = marker.args[0]
    table = item.config._acceptance
    if report.when == "call":
        table[n] = table.get(n, True) and report.passed
    elif report.failed:
        table[n] = False


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    table = getattr(config, "_acceptance", {})
    if not table:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(table):
        terminalreporter.write_line(f"ACCEPTANCE {n}: {'PASS' if table[n] else 'FAIL'}")
