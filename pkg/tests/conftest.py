from __future__ import annotations

from hypothesis import HealthCheck, settings

import metricdim.fractional as fractional_mod
from oracles import ACCEPTANCE_LINES, CERTIFICATE_LOG, certificate_holds

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

_original = fractional_mod.fractional_dimension


def _audited(sys, reduce=True):
    res = _original(sys, reduce)
    ok = res.verified and certificate_holds(sys, res)
    CERTIFICATE_LOG.append(ok)
    assert ok, "LP certificate failed independent recheck"
    return res


def pytest_configure(config):
    # patched before test modules are imported, so direct imports see the audited version too
    fractional_mod.fractional_dimension = _audited


def pytest_unconfigure(config):
    fractional_mod.fractional_dimension = _original


def pytest_collection_modifyitems(items):
    # acceptance last, so the certificate criterion sees every solve in the run
    items.sort(key=lambda it: it.nodeid.startswith("tests/test_acceptance.py"))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
    if CERTIFICATE_LOG:
        bad = CERTIFICATE_LOG.count(False)
        terminalreporter.write_line(f"LP certificates rechecked: {len(CERTIFICATE_LOG)}, failed: {bad}")
