import os

import pytest

from zetaline.gaps import GAP_MARGIN
from zetaline.storage import load_or_scan
from zetaline.zeros import scan_zeros

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session", autouse=True)
def _isolated_cache(tmp_path_factory):
    """Keep zero-table caches written during the run out of the user's cache."""
    old = os.environ.get("ZETALINE_CACHE_DIR")
    os.environ["ZETALINE_CACHE_DIR"] = str(tmp_path_factory.mktemp("zcache"))
    yield
    if old is None:
        os.environ.pop("ZETALINE_CACHE_DIR", None)
    else:
        os.environ["ZETALINE_CACHE_DIR"] = old


@pytest.fixture(scope="session")
def table_100():
    return scan_zeros(0.0, 100.0)


@pytest.fixture(scope="session")
def table_1e3():
    """Complete table over (0, 1000 + margin]."""
    return scan_zeros(0.0, 1000.0 + GAP_MARGIN)


@pytest.fixture(scope="session")
def table_1e4():
    return scan_zeros(0.0, 10000.0 + GAP_MARGIN)


@pytest.fixture(scope="session")
def table_1e5():
    """Cached so the acceptance run can reuse it."""
    return load_or_scan(0.0, 100000.0 + GAP_MARGIN)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
