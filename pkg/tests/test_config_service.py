import pytest

from domain.errors import OrderCapExceeded
from infrastructure.config.environment.env_loader import AnalysisLimits, EnvironmentLoader
from infrastructure.config.services.config_service import ConfigService


class TestEnvironmentLoader:
    def test_defaults(self):
        limits = EnvironmentLoader().get_limits()
        assert limits == AnalysisLimits()
        assert limits.to_dict()["sweep_max_order"] == 24

    def test_reads_variables(self, monkeypatch):
        monkeypatch.setenv("CONJGEN_SWEEP_MAX_ORDER", "12")
        monkeypatch.setenv("CONJGEN_JOBS", "3")
        monkeypatch.setenv("LOG_LEVEL", "debug")
        limits = EnvironmentLoader().get_limits()
        assert limits.sweep_max_order == 12
        assert limits.jobs == 3
        assert limits.log_level == "DEBUG"

    def test_max_order_is_clamped(self, monkeypatch):
        monkeypatch.setenv("CONJGEN_MAX_ORDER", "500")
        assert EnvironmentLoader().get_limits().max_order == 64

    def test_bad_integers_fall_back(self, monkeypatch):
        monkeypatch.setenv("CONJGEN_JOBS", "many")
        assert EnvironmentLoader().get_limits().jobs == 1

    def test_reload(self, monkeypatch):
        loader = EnvironmentLoader()
        assert loader.get_limits().exhaustive_order == 6
        monkeypatch.setenv("CONJGEN_EXHAUSTIVE_ORDER", "4")
        assert loader.get_limits().exhaustive_order == 6
        assert loader.reload().exhaustive_order == 4


class TestConfigService:
    def setup_method(self):
        self.config_service = ConfigService(EnvironmentLoader())

    def test_default_limits_are_valid(self):
        result = self.config_service.validate_config()
        assert result.is_success, result.error

    def test_invalid_limits(self, monkeypatch):
        monkeypatch.setenv("CONJGEN_EXHAUSTIVE_ORDER", "7")
        monkeypatch.setenv("CONJGEN_EXHAUSTIVE_CAP", "6")
        result = ConfigService(EnvironmentLoader()).validate_config()
        assert result.is_error
        assert result.error == "exhaustive_order exceeds exhaustive_cap"

    def test_sweep_config(self):
        config = self.config_service.get_sweep_config(max_order=12, jobs=None)
        assert config.max_order == 12
        assert config.jobs == 1
        assert config.order_cap == 64
        assert config.exhaustive_order == 6

    def test_overrides(self):
        self.config_service.set_config("sweep_max_order", 10)
        assert self.config_service.get_limits().sweep_max_order == 10
        assert self.config_service.get_config("sweep_max_order") == 10
        assert self.config_service.get_sweep_config().max_order == 10
        assert self.config_service.get_config("unknown", "fallback") == "fallback"

    def test_max_order_override_is_capped(self):
        with pytest.raises(OrderCapExceeded):
            self.config_service.set_config("max_order", 65)

    def test_reload_drops_overrides(self):
        self.config_service.set_config("jobs", 4)
        assert self.config_service.reload_config().is_success
        assert self.config_service.get_limits().jobs == 1
