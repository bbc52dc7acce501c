# domain/entities/sweep_report.py
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from domain.entities.lemma_check import LemmaCheckResult
from domain.errors import OrderCapExceeded

HARD_ORDER_CAP = 64


@dataclass(frozen=True)
class SweepConfig:
    """Bounds of one verification sweep"""
    max_order: int = 24
    exhaustive_order: int = 6
    jobs: int = 1
    order_cap: int = HARD_ORDER_CAP
    exhaustive_cap: int = 8
    group_files: Tuple[str, ...] = ()
    cyclic_only: bool = False

    def __post_init__(self):
        object.__setattr__(self, "group_files", tuple(self.group_files))
        if self.order_cap > HARD_ORDER_CAP:
            raise OrderCapExceeded(self.order_cap, HARD_ORDER_CAP, "sweep configuration")
        if self.max_order > self.order_cap:
            raise OrderCapExceeded(self.max_order, self.order_cap, "build_catalog")
        if self.exhaustive_order > self.exhaustive_cap:
            raise OrderCapExceeded(self.exhaustive_order, self.exhaustive_cap, "enumerate_groups_exhaustive")
        if self.max_order < 1:
            raise ValueError(f"max_order must be positive, got {self.max_order}")
        if self.exhaustive_order < 0:
            raise ValueError(f"exhaustive_order must be nonnegative, got {self.exhaustive_order}")
        if self.jobs < 1:
            raise ValueError(f"jobs must be positive, got {self.jobs}")

    def to_dict(self) -> Dict[str, Any]:
        # jobs is a property of the run, not of the result
        return {
            "max_order": self.max_order,
            "exhaustive_order": self.exhaustive_order,
            "order_cap": self.order_cap,
            "exhaustive_cap": self.exhaustive_cap,
            "group_files": list(self.group_files),
            "cyclic_only": self.cyclic_only,
        }


def _empty_counts() -> Dict[str, int]:
    return {"pass": 0, "fail": 0, "vacuous": 0}


@dataclass(frozen=True)
class SweepReport:
    config: SweepConfig
    group_names: Tuple[str, ...]
    checks: Tuple[LemmaCheckResult, ...]
    started_at: str = ""
    wall_time_s: float = 0.0
    jobs: int = 1
    lemma_ids: Tuple[str, ...] = field(default=())

    @property
    def failed(self) -> bool:
        return any(not check.passed for check in self.checks)

    def summary(self) -> Dict[str, int]:
        counts = _empty_counts()
        for check in self.checks:
            counts[check.status] += 1
        return counts

    def per_lemma(self) -> Dict[str, Dict[str, int]]:
        table: Dict[str, Dict[str, int]] = {lemma: _empty_counts() for lemma in self.lemma_ids}
        for check in self.checks:
            table.setdefault(check.lemma_id.value, _empty_counts())[check.status] += 1
        return dict(sorted(table.items()))

    def counterexamples(self) -> List[Dict[str, Any]]:
        return [
            {"lemma": c.lemma_id.value, "group": c.group_descriptor, "counterexample": c.counterexample}
            for c in self.checks if not c.passed
        ]

    def to_dict(self, include_run: bool = True) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "config": self.config.to_dict(),
            "groups": len(self.group_names),
            "group_names": list(self.group_names),
            "checks": [check.to_dict() for check in self.checks],
            "summary": self.summary(),
            "per_lemma": self.per_lemma(),
            "counterexamples": self.counterexamples(),
        }
        if include_run:
            data["run"] = {"started_at": self.started_at, "wall_time_s": self.wall_time_s, "jobs": self.jobs}
        return data
