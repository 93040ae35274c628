import numpy as np
import pytest

from agtrellis.code import code_from_matrix
from agtrellis.gf import field_of_order

SELF_DUAL = [[1, 1, 0, 0], [0, 0, 1, 1]]

_criteria: dict[int, bool] = {}


def random_code(F, n, k, rng):
    """Random code of length n and dimension at most k (rank may drop)."""
    while True:
        M = rng.integers(0, F.q, size=(k, n))
        if M.any():
            return code_from_matrix(F, M)


def random_codes(q, count, rng, max_n=10, max_k=6):
    F = field_of_order(q)
    out = []
    for _ in range(count):
        n = int(rng.integers(2, max_n + 1))
        k = int(rng.integers(1, min(n, max_k) + 1))
        out.append(random_code(F, n, k, rng))
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def self_dual_code():
    return code_from_matrix(field_of_order(2), SELF_DUAL)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number = marker.args[0]
    if report.when == "call" or (report.when == "setup" and report.failed):
        _criteria[number] = _criteria.get(number, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        status = "PASS" if _criteria[number] else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {status}")
