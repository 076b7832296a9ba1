from __future__ import annotations

from functools import lru_cache

import pytest

from twistfloer.box import build_pair
from twistfloer.type_a import load_fixture


@lru_cache(maxsize=None)
def fixture(name: str):
    return load_fixture(name)


@lru_cache(maxsize=None)
def pair(name: str, m: int):
    return build_pair(fixture(name), m)


@pytest.fixture(scope="session")
def mazur():
    return fixture("mazur")


@pytest.fixture(scope="session")
def unknot_core():
    return fixture("unknot_core")


@pytest.fixture(scope="session")
def h_infinity():
    return fixture("h_infinity")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    try:
        from tests import test_acceptance
    except ImportError:
        return
    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(test_acceptance.RESULTS):
        ok, detail = test_acceptance.RESULTS[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
