import os

from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


# one summary line per acceptance criterion
_CRITERIA = {}


def pytest_runtest_logreport(report):
    marker = "test_acceptance.py::test_criterion_"
    if marker not in report.nodeid:
        return
    key = report.nodeid.split(marker)[1]
    if report.when == "call" or report.outcome != "passed":
        _CRITERIA[key] = _CRITERIA.get(key, True) and report.outcome == "passed"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_CRITERIA, key=lambda k: (len(k.split("_")[0]), k)):
        num, _, name = key.partition("_")
        terminalreporter.write_line(f"criterion {num:>2} {name.replace('_', ' '):42} "
                                    f"{'PASS' if _CRITERIA[key] else 'FAIL'}")
