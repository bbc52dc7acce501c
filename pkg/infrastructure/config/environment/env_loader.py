# infrastructure/config/environment/env_loader.py
import os
from dataclasses import dataclass, asdict
from typing import Any, Dict, Optional

try:
    from dotenv import load_dotenv
    load_dotenv()  # Load .env file
except ImportError:
    pass  # python-dotenv not available

# Tables above this order are out of scope for every operation
HARD_ORDER_CAP = 64


@dataclass(frozen=True)
class AnalysisLimits:
    """Computation bounds read from the environment"""
    max_order: int = HARD_ORDER_CAP
    sweep_max_order: int = 24
    exhaustive_order: int = 6
    exhaustive_cap: int = 8
    closure_cap: int = 5040
    associativity_full_scan: int = HARD_ORDER_CAP
    jobs: int = 1
    log_level: str = "WARNING"

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


class EnvironmentLoader:
    """Service for loading limits from environment variables"""

    def __init__(self):
        self.limits: Optional[AnalysisLimits] = None

    def load_from_env(self) -> AnalysisLimits:
        """Load limits from CONJGEN_* variables"""
        defaults = AnalysisLimits()
        self.limits = AnalysisLimits(
            max_order=min(self.get_int("CONJGEN_MAX_ORDER", defaults.max_order), HARD_ORDER_CAP),
            sweep_max_order=self.get_int("CONJGEN_SWEEP_MAX_ORDER", defaults.sweep_max_order),
            exhaustive_order=self.get_int("CONJGEN_EXHAUSTIVE_ORDER", defaults.exhaustive_order),
            exhaustive_cap=self.get_int("CONJGEN_EXHAUSTIVE_CAP", defaults.exhaustive_cap),
            closure_cap=self.get_int("CONJGEN_CLOSURE_CAP", defaults.closure_cap),
            associativity_full_scan=self.get_int(
                "CONJGEN_ASSOCIATIVITY_FULL_SCAN", defaults.associativity_full_scan
            ),
            jobs=self.get_int("CONJGEN_JOBS", defaults.jobs),
            log_level=self.get("LOG_LEVEL", defaults.log_level).upper(),
        )
        return self.limits

    def get_limits(self) -> AnalysisLimits:
        """Get current limits"""
        if self.limits is None:
            return self.load_from_env()
        return self.limits

    def reload(self) -> AnalysisLimits:
        self.limits = None
        return self.load_from_env()

    def get(self, key: str, default: str = None) -> str:
        """Get environment variable as string"""
        return os.getenv(key, default)

    def get_int(self, key: str, default: int = 0) -> int:
        """Get environment variable as integer"""
        try:
            return int(os.getenv(key, str(default)))
        except ValueError:
            return default
