"""
Pytest global configuration.
- Ensures project root on PYTHONPATH
- Runs async test functions without requiring external plugins
- Shared small groups and group-file helpers
"""
import asyncio
import inspect
import json
import os
import sys

import pytest

PROJECT_ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
if PROJECT_ROOT not in sys.path:
    sys.path.insert(0, PROJECT_ROOT)

from domain.algebra.finite_group_core import direct_product  # noqa: E402
from domain.algebra.standard_groups import (  # noqa: E402
    alternating_group,
    cyclic_group,
    cyclic_semidirect_product,
    dicyclic_group,
    dihedral_group,
    symmetric_group,
)


@pytest.hookimpl(tryfirst=True)
def pytest_pyfunc_call(pyfuncitem: pytest.Function):
    """Run `async def` tests via asyncio.run; returning True skips the default call"""
    test_fn = pyfuncitem.obj
    if not inspect.iscoroutinefunction(test_fn):
        return None
    sig = inspect.signature(test_fn)
    accepted = {k: v for k, v in pyfuncitem.funcargs.items() if k in sig.parameters}
    asyncio.run(test_fn(**accepted))
    return True


@pytest.fixture(scope="session")
def z2():
    return cyclic_group(2)


@pytest.fixture(scope="session")
def z6():
    return cyclic_group(6)


@pytest.fixture(scope="session")
def z2xz2():
    return direct_product(cyclic_group(2), cyclic_group(2))


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def d4():
    return dihedral_group(4)


@pytest.fixture(scope="session")
def q8():
    return dicyclic_group(2)


@pytest.fixture(scope="session")
def a4():
    return alternating_group(4)


@pytest.fixture(scope="session")
def z7_z3():
    return cyclic_semidirect_product(7, 3)


@pytest.fixture
def write_group_file(tmp_path):
    """Write a JSON document to tmp_path/<name> and return the path as a string"""
    def write(name, document):
        path = tmp_path / name
        if isinstance(document, str):
            path.write_text(document, encoding="utf-8")
        else:
            path.write_text(json.dumps(document), encoding="utf-8")
        return str(path)
    return write


CONJGEN_VARIABLES = (
    "CONJGEN_MAX_ORDER", "CONJGEN_SWEEP_MAX_ORDER", "CONJGEN_EXHAUSTIVE_ORDER", "CONJGEN_EXHAUSTIVE_CAP",
    "CONJGEN_CLOSURE_CAP", "CONJGEN_ASSOCIATIVITY_FULL_SCAN", "CONJGEN_JOBS", "LOG_LEVEL",
)


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Every test starts from the default limits"""
    for name in CONJGEN_VARIABLES:
        monkeypatch.delenv(name, raising=False)
