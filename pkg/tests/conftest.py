import numpy as np
import pytest

from bitplane_wm import corpus


@pytest.fixture(scope="session")
def cover():
    return corpus.load_cover()


@pytest.fixture(scope="session")
def signature():
    return corpus.load_signature()


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


ACCEPTANCE_TITLES = {
    "test_ac1": "AC1 round-trip exactness, 64 combinations",
    "test_ac2": "AC2 decompose/recompose identity",
    "test_ac3": "AC3 fidelity PSNR analytic check",
    "test_ac4": "AC4 metric oracles",
    "test_ac5": "AC5 attack contracts",
    "test_ac6": "AC6 optimizer correctness",
    "test_ac7": "AC7 frozen-corpus regression",
    "test_ac8": "AC8 weight-profile presets",
}

_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when != "call" and not report.failed:
        return
    name = report.nodeid.split("::")[-1]
    _acceptance.setdefault(name, []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for key, title in ACCEPTANCE_TITLES.items():
        runs = [(n, ok) for n, oks in _acceptance.items() if n.startswith(key) for ok in oks]
        if not runs:
            continue
        ok = all(flag for _, flag in runs)
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {title}")
        if not ok:
            for n, flag in runs:
                if not flag:
                    terminalreporter.write_line(f"        failed: {n}")
