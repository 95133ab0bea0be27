import logging

from semicovers.config import Settings, configure_logging, get_settings


class TestSettings:
    """Environment overrides for the runtime limits."""

    def test_defaults(self):
        settings = get_settings()
        assert settings == Settings()
        assert settings.default_order == "graded-then-revcoordlex"

    def test_integer_overrides(self, monkeypatch):
        monkeypatch.setenv("SEMICOVERS_COORD_LIMIT", "1000")
        monkeypatch.setenv("SEMICOVERS_DEGREE_CEILING", "25")
        monkeypatch.setenv("SEMICOVERS_ORACLE_MAX_CANDIDATES", "6")
        settings = get_settings()
        assert (settings.coord_limit, settings.degree_ceiling, settings.oracle_max_candidates) == (1000, 25, 6)

    def test_non_integer_ignored(self, monkeypatch, caplog):
        monkeypatch.setenv("SEMICOVERS_DEGREE_CEILING", "lots")
        with caplog.at_level(logging.WARNING, logger="semicovers.config"):
            assert get_settings().degree_ceiling == Settings().degree_ceiling
        assert "SEMICOVERS_DEGREE_CEILING" in caplog.text

    def test_log_level(self, monkeypatch):
        monkeypatch.setenv("LOG_LEVEL", "debug")
        assert get_settings().log_level == "DEBUG"

    def test_invalid_log_level_falls_back(self, monkeypatch):
        monkeypatch.setenv("LOG_LEVEL", "CHATTY")
        assert get_settings().log_level == "INFO"

    def test_cached(self):
        assert get_settings() is get_settings()


class TestConfigureLogging:
    """configure_logging tolerates unknown levels."""

    def test_unknown_level(self, mocker):
        basic = mocker.patch("semicovers.config.logging.basicConfig")
        configure_logging("chatty")
        assert basic.call_args.kwargs["level"] == logging.INFO

    def test_explicit_level(self, mocker):
        basic = mocker.patch("semicovers.config.logging.basicConfig")
        configure_logging("warning")
        assert basic.call_args.kwargs["level"] == logging.WARNING
