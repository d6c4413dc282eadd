from __future__ import annotations

import re

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")

_CRITERION = re.compile(r"test_criterion_(\d+)_")


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False, help="run the long checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="long check; run with --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_configure(config):
    config._criterion_outcomes = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    match = _CRITERION.search(item.name)
    if match and (report.when == "call" or report.outcome != "passed"):
        item.config._criterion_outcomes.setdefault(int(match.group(1)), []).append(report.outcome)


def pytest_terminal_summary(terminalreporter, config):
    outcomes = getattr(config, "_criterion_outcomes", {})
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(outcomes):
        states = outcomes[number]
        if "failed" in states:
            verdict = "FAIL"
        elif all(s == "skipped" for s in states):
            verdict = "SKIP"
        else:
            verdict = "PASS"
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}")
