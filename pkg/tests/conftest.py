import pytest

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n, desc): acceptance criterion n with a short description")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when != "call" and not report.failed:
        return
    n, desc = marker.args
    entry = _criteria.setdefault(n, {"desc": desc, "passed": True, "detail": ""})
    if report.failed:
        entry["passed"] = False
        if not entry["detail"] and call.excinfo is not None:
            entry["detail"] = str(call.excinfo.value).splitlines()[0][:160]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        entry = _criteria[n]
        status = "PASS" if entry["passed"] else "FAIL"
        line = f"{status} criterion {n}: {entry['desc']}"
        if entry["detail"]:
            line += f"  ({entry['detail']})"
        terminalreporter.write_line(line)
