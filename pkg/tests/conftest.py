"""Shared test configuration: acceptance criterion bookkeeping.

Tests marked @pytest.mark.criterion(n) feed a per-criterion pass/fail line
printed after the run.  A criterion with any failing (or expectedly
failing) test reports FAIL; strict-xfail tests document known data
discrepancies without breaking the suite.
"""

import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "suite", deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("suite")

CRITERIA = {
    1: "independence table for t=4 reproduced exactly over n in [5,102]",
    2: "independence tables for t=5 and t=6 match on every listed n",
    3: "three-case closed form equals search for t=3, 4 <= n <= 60",
    4: "spanning table for s=2 reproduced exactly for n <= 51",
    5: "closed forms for tau(G,1), tau(G,2), phi(G,1) equal exhaustive search",
    6: "duality a(m,t/2) <= |G| <= a(m,s) holds on the full small-case scan",
    7: "perfect sets at m=2, s=3 are exactly the unit multiples of {3,4} in Z25",
    8: "every 3-independent m-subset of Z_4m yields a spherical 3-design",
    9: "classical configurations show the expected strengths and distance counts",
    10: "binomial bounds and the 3-design exclusion interval match the data",
    11: "DP sumsets equal coefficient enumeration; predicate equivalence holds",
}

_outcomes: dict[int, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(num): test contributes to numbered acceptance criterion"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    num = marker.args[0]
    if report.when == "setup" and (report.failed or report.skipped):
        _outcomes.setdefault(num, []).append("fail" if report.failed else "skip")
    if report.when != "call":
        return
    if hasattr(report, "wasxfail"):
        status = "known-fail" if report.skipped else "fail"
    elif report.passed:
        status = "pass"
    elif report.failed:
        status = "fail"
    else:
        status = "skip"
    _outcomes.setdefault(num, []).append(status)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        outcomes = _outcomes.get(num, [])
        if not outcomes:
            verdict = "NOT RUN"
        elif all(o == "pass" for o in outcomes):
            verdict = "PASS"
        elif any(o == "known-fail" for o in outcomes) and all(
            o in ("pass", "known-fail") for o in outcomes
        ):
            verdict = "FAIL (documented source-data discrepancy)"
        else:
            verdict = "FAIL"
        terminalreporter.write_line(f"criterion {num:2d}: {verdict:<42} {CRITERIA[num]}")
