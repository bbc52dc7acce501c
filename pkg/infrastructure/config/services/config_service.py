# infrastructure/config/services/config_service.py
import logging
from dataclasses import replace
from typing import Any, Dict

from domain.entities.sweep_report import SweepConfig
from domain.errors import OrderCapExceeded
from domain.services.IConfigService import IConfigService
from domain.services.rop_service import ROPService
from domain.utils.result import Result
from ..environment.env_loader import AnalysisLimits, EnvironmentLoader, HARD_ORDER_CAP


class ConfigService(IConfigService):
    """Limits from the environment plus in-process overrides"""

    def __init__(self, env_loader: EnvironmentLoader = None):
        self.env_loader = env_loader or EnvironmentLoader()
        self.rop_service = ROPService()
        self.logger = logging.getLogger(__name__)
        self._config_cache: Dict[str, Any] = {}

    def get_limits(self) -> AnalysisLimits:
        """Environment limits with set_config overrides applied"""
        limits = self.env_loader.get_limits()
        overrides = {k: v for k, v in self._config_cache.items() if hasattr(limits, k)}
        return replace(limits, **overrides) if overrides else limits

    def get_sweep_config(self, **overrides: Any) -> SweepConfig:
        """SweepConfig from the limits; None-valued overrides are ignored"""
        limits = self.get_limits()
        values: Dict[str, Any] = {
            "max_order": limits.sweep_max_order,
            "exhaustive_order": limits.exhaustive_order,
            "jobs": limits.jobs,
            "order_cap": limits.max_order,
            "exhaustive_cap": limits.exhaustive_cap,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return SweepConfig(**values)

    def validate_config(self) -> Result[AnalysisLimits, str]:
        """Validate the current limits"""
        return self.rop_service.pipeline(
            self.rop_service.validate(lambda limits: limits.max_order <= HARD_ORDER_CAP,
                                      f"max_order above {HARD_ORDER_CAP}"),
            self.rop_service.validate(lambda limits: limits.max_order >= 1, "max_order must be positive"),
            self.rop_service.validate(lambda limits: limits.sweep_max_order <= limits.max_order,
                                      "sweep_max_order exceeds max_order"),
            self.rop_service.validate(lambda limits: limits.exhaustive_order <= limits.exhaustive_cap,
                                      "exhaustive_order exceeds exhaustive_cap"),
            self.rop_service.validate(lambda limits: limits.jobs >= 1, "jobs must be positive"),
            self.rop_service.validate(lambda limits: limits.closure_cap >= 1, "closure_cap must be positive"),
        )(self.get_limits())

    def get_config(self, key: str, default: Any = None) -> Any:
        """Get configuration value by key"""
        if key in self._config_cache:
            return self._config_cache[key]
        return self.get_limits().to_dict().get(key, default)

    def set_config(self, key: str, value: Any) -> None:
        """Set configuration value by key"""
        if key == "max_order" and value > HARD_ORDER_CAP:
            raise OrderCapExceeded(value, HARD_ORDER_CAP, "set_config")
        self._config_cache[key] = value

    def reload_config(self) -> Result[bool, str]:
        """Reload limits from the environment"""
        try:
            self.env_loader.reload()
            self._config_cache.clear()
            self.logger.info("Configuration reloaded")
            return Result.success(True)
        except Exception as e:
            return Result.error(f"Failed to reload config: {str(e)}")
