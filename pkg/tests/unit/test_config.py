"""Tests for configuration module."""

from pathlib import Path

import pytest
from pydantic import ValidationError

from lsakit.config import Settings, get_settings, reload_settings


def test_settings_from_env(test_env):
    """Test that settings load correctly from environment."""
    settings = reload_settings()

    assert settings.app_env == "test"
    assert settings.field_mode == "exact"
    assert settings.trace_level == "debug"


def test_settings_defaults():
    """Test that settings have sensible defaults."""
    settings = Settings(_env_file=None)

    assert settings.numeric_eps == 1e-10
    assert settings.max_transport_iterations == 50
    assert settings.max_canonical_rounds == 32
    assert settings.grid_sample_limit == 729
    assert settings.classify_workers == 4


def test_settings_paths(test_env, test_data_dir):
    """Test that the trace file is a Path."""
    settings = reload_settings()

    assert isinstance(settings.trace_file, Path)
    assert settings.trace_file.parent == test_data_dir


def test_ensure_directories(monkeypatch, tmp_path):
    """Test that the trace directory is created."""
    monkeypatch.setenv("TRACE_FILE", str(tmp_path / "nested" / "trace.jsonl"))
    settings = reload_settings()

    assert settings.trace_file.parent.exists()


def test_numeric_mode_from_env(monkeypatch):
    monkeypatch.setenv("FIELD_MODE", "numeric")
    monkeypatch.setenv("NUMERIC_EPS", "1e-6")
    settings = reload_settings()

    assert settings.field_mode == "numeric"
    assert settings.numeric_eps == 1e-6


def test_invalid_values_rejected(monkeypatch):
    monkeypatch.setenv("FIELD_MODE", "symbolic")
    with pytest.raises(ValidationError):
        reload_settings()


def test_get_settings_singleton():
    """Test that get_settings returns the same instance."""
    settings1 = get_settings()
    settings2 = get_settings()

    assert settings1 is settings2
