import pytest

_RESULTS = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_RESULTS] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        item.config.stash[_RESULTS].append((marker.args[0], report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash[_RESULTS]
    if not results:
        return
    grouped: dict[str, list] = {}
    for label, outcome, duration in results:
        grouped.setdefault(label, []).append((outcome, duration))
    terminalreporter.section("acceptance criteria")
    for label, runs in grouped.items():
        status = "PASS" if all(o == "passed" for o, _ in runs) else "FAIL"
        cases = f", {len(runs)} cases" if len(runs) > 1 else ""
        total = sum(d for _, d in runs)
        terminalreporter.write_line(f"{status}  {label}  ({total:.2f}s{cases})")
