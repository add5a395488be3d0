"""
Shared fixtures for the skein4 tests.

The cache directory, database and catalog are redirected to a temporary
directory before any skein4 module reads its configuration.
"""

import os
import shutil
import tempfile

_CACHE = tempfile.mkdtemp(prefix="skein4-tests-")
os.environ["SKEIN4_CACHE_DIR"] = _CACHE
os.environ["SKEIN4_DATABASE_URL"] = f"sqlite:///{os.path.join(_CACHE, 'skein4.db')}"
os.environ["SKEIN4_CATALOG_FILE"] = os.path.join(_CACHE, "catalog.tsv")
os.environ.setdefault("SKEIN4_PERSIST_TABLES", "1")

import pytest  # noqa: E402

from skein4.app import config  # noqa: E402
from skein4.app.services.coeff import builtin_spec  # noqa: E402
from skein4.app.services.tangles import parse_tangle  # noqa: E402


def pytest_sessionfinish(session, exitstatus):
    shutil.rmtree(_CACHE, ignore_errors=True)


@pytest.fixture
def spec_i():
    return builtin_spec("spec-i")


@pytest.fixture
def spec_ii():
    return builtin_spec("spec-ii")


@pytest.fixture
def spec_iii():
    return builtin_spec("spec-iii")


@pytest.fixture
def kauffman():
    return builtin_spec("kauffman")


@pytest.fixture
def generic():
    return builtin_spec("generic")


@pytest.fixture
def p1():
    return builtin_spec("p1")


@pytest.fixture
def parse():
    """Parse without touching the catalog."""

    def _parse(text):
        return parse_tangle(text, use_catalog=False)

    return _parse


@pytest.fixture
def fresh_catalog(tmp_path, monkeypatch):
    """A private writable catalog seeded from the shipped corpus."""
    path = tmp_path / "catalog.tsv"
    monkeypatch.setattr(config, "CATALOG_FILE", path)
    return path


@pytest.fixture(scope="session")
def small_links():
    return [
        "N(braid2[])",
        "N(int(0))",
        "torus(2,2)",
        "torus(2,-2)",
        "torus(2,3)",
        "torus(2,-3)",
        "N(rat(2 2))",
        "N(rat(3 2))",
        "close(braid3[1 -2 1 -2])",
        "close(braid3[1 1 2])",
    ]
