"""
Тесты настроек и логирования
"""

import structlog

from mutvis.core.config import Settings, constants, get_settings, settings
from mutvis.core.logging_config import configure_logging


def test_defaults():
    fresh = Settings(_env_file=None)
    assert fresh.threads == 1
    assert fresh.solver_max_vertices == 40
    assert fresh.brute_force_max_vertices == 16
    assert fresh.debug is False


def test_env_override(monkeypatch):
    monkeypatch.setenv("MUTVIS_THREADS", "4")
    monkeypatch.setenv("MUTVIS_DEBUG", "true")
    fresh = Settings(_env_file=None)
    assert fresh.threads == 4
    assert fresh.debug is True


def test_singleton():
    assert get_settings() is settings


def test_constants():
    assert constants.CERTIFICATE_FORMAT == "mutvis-cert/1"
    assert (constants.EXIT_OK, constants.EXIT_INVALID, constants.EXIT_ERROR) == (0, 1, 2)


def test_logs_go_to_stderr(capsys):
    configure_logging("INFO", json_logs=True)
    structlog.get_logger("test").info("probe event", answer=42)
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "probe event" in captured.err
    with capsys.disabled():
        configure_logging("WARNING")
