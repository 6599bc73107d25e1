from hypothesis import HealthCheck, settings

settings.register_profile(
    "repro",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repro")


import sys

_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _acceptance.append((report.nodeid.rsplit("::", 1)[-1], report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    mod = next((m for k, m in sys.modules.items() if k.endswith("test_acceptance")), None)
    results = getattr(mod, "RESULTS", {})
    labels = getattr(mod, "LABELS", {})
    terminalreporter.section("acceptance criteria")
    for name, passed in _acceptance:
        label = labels.get(name, name)
        detail = results.get(label, (None, ""))[1]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'} {label}: {detail}".rstrip(": "))
