"""Pytest configuration and shared fixtures."""

import tempfile
from pathlib import Path

import pytest

from lsakit.algebra import idempotent_algebra, zero_algebra
from lsakit.classification import auslander3, family5, simple4
from lsakit.config import reload_settings
from lsakit.tracing import reload_tracer


@pytest.fixture(scope="session")
def test_data_dir():
    """Create a temporary directory for test data."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture(autouse=True)
def test_env(test_data_dir, monkeypatch):
    """Set up test environment variables."""
    # Override settings for tests
    monkeypatch.setenv("APP_ENV", "test")
    monkeypatch.setenv("FIELD_MODE", "exact")
    monkeypatch.setenv("TRACE_FILE", str(test_data_dir / "trace.jsonl"))
    monkeypatch.setenv("TRACE_LEVEL", "debug")
    reload_settings()
    reload_tracer()


@pytest.fixture
def auslander():
    return auslander3()


@pytest.fixture
def simple4_algebra():
    return simple4()


@pytest.fixture
def family5_three():
    return family5(3)


@pytest.fixture
def zero2():
    return zero_algebra(2)


@pytest.fixture
def idempotent1():
    return idempotent_algebra()
