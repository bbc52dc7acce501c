# application/services/sweep_service.py
import asyncio
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import List, Optional, Tuple

from application.services.catalog_service import build_catalog, cyclic_only, enumerate_entries
from domain.algebra.almost_cyclic_analysis import sweep_group
from domain.entities.catalog_entry import CatalogEntry, Provenance
from domain.entities.finite_group import FiniteGroup
from domain.entities.lemma_check import LemmaCheckResult, LemmaId
from domain.entities.sweep_report import SweepConfig, SweepReport
from domain.errors import GroupTheoryError
from domain.repositories.group_repository import GroupRepository
from domain.services.ISweepService import ISweepService
from domain.utils.result import Result
from infrastructure.monitoring.logging.structured_logger import StructuredLogger

structured_logger = StructuredLogger(__name__)


@dataclass(frozen=True)
class SweepTask:
    """One group to check; picklable for the worker pool"""
    name: str
    group: FiniteGroup
    factors: Optional[Tuple[FiniteGroup, FiniteGroup]]
    cap: int


def _check_entry(task: SweepTask) -> List[LemmaCheckResult]:
    return sweep_group(task.group, task.name, task.factors, task.cap)


class SweepService(ISweepService):
    """Runs every lemma check over the catalog, the exhaustive enumeration and user group files"""

    def __init__(self, group_repository: GroupRepository):
        self.group_repository = group_repository
        self.logger = logging.getLogger(__name__)

    def collect_entries(self, config: SweepConfig) -> List[CatalogEntry]:
        """Every group of the sweep; construction errors propagate"""
        entries = list(build_catalog(config.max_order, config.order_cap))
        for order in range(1, config.exhaustive_order + 1):
            entries.extend(enumerate_entries(order, config.exhaustive_cap))
        for path in config.group_files:
            group = self.group_repository.load_group(path)
            entries.append(CatalogEntry(f"file:{Path(path).stem}", group, Provenance("file")))
        if config.cyclic_only:
            entries = cyclic_only(entries)

        seen = set()
        for entry in entries:
            if entry.name in seen:
                raise ValueError(f"duplicate group name {entry.name}")
            seen.add(entry.name)
        return entries

    async def run_checks(self, tasks: List[SweepTask], jobs: int) -> List[LemmaCheckResult]:
        if jobs <= 1 or len(tasks) <= 1:
            results = [_check_entry(task) for task in tasks]
        else:
            loop = asyncio.get_running_loop()
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = await asyncio.gather(*(loop.run_in_executor(pool, _check_entry, task) for task in tasks))
        checks = [check for group_checks in results for check in group_checks]
        # reducer order does not depend on worker scheduling
        return sorted(checks, key=lambda c: (c.group_descriptor, c.lemma_id.value))

    async def verify_all(self, config: SweepConfig) -> Result[SweepReport, str]:
        started_at = datetime.now(timezone.utc).isoformat(timespec="seconds")
        started = time.perf_counter()
        try:
            entries = self.collect_entries(config)
        except (GroupTheoryError, ValueError) as e:
            self.logger.error("Sweep aborted while building groups: %s", e)
            return Result.error(f"{type(e).__name__}: {e}")

        tasks = [SweepTask(e.name, e.group, e.factor_groups, config.order_cap) for e in entries]
        try:
            checks = await self.run_checks(tasks, config.jobs)
        except GroupTheoryError as e:
            return Result.error(f"{type(e).__name__}: {e}")

        report = SweepReport(
            config=config,
            group_names=tuple(sorted(e.name for e in entries)),
            checks=tuple(checks),
            started_at=started_at,
            wall_time_s=round(time.perf_counter() - started, 3),
            jobs=config.jobs,
            lemma_ids=tuple(sorted(lemma.value for lemma in LemmaId)),
        )
        structured_logger.log_performance(
            "verify_all", report.wall_time_s * 1000,
            groups=len(entries), checks=len(checks), failures=report.summary()["fail"],
        )
        return Result.success(report)
