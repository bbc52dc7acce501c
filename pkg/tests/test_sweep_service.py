import application.services.sweep_service as sweep_module
from application.services.sweep_service import SweepService
from domain.entities.lemma_check import ALMOST_CYCLIC_HYPOTHESIS, LemmaCheckResult, LemmaId
from domain.entities.sweep_report import SweepConfig
from infrastructure.storage.json_group_repository import JsonGroupRepository

import pytest

from domain.errors import OrderCapExceeded

Z2_TABLE = {"order": 2, "table": [[0, 1], [1, 0]]}


class TestSweepConfig:
    def test_defaults(self):
        config = SweepConfig()
        assert (config.max_order, config.exhaustive_order, config.jobs) == (24, 6, 1)
        assert "jobs" not in config.to_dict()

    def test_bounds(self):
        with pytest.raises(OrderCapExceeded):
            SweepConfig(max_order=65)
        with pytest.raises(OrderCapExceeded):
            SweepConfig(exhaustive_order=9)
        with pytest.raises(ValueError):
            SweepConfig(jobs=0)
        with pytest.raises(ValueError):
            SweepConfig(max_order=0)


class TestSweepService:
    def setup_method(self):
        self.service = SweepService(JsonGroupRepository())

    async def test_default_sweep_has_no_failures(self):
        result = await self.service.verify_all(SweepConfig())
        assert result.is_success, result.error
        report = result.value
        assert not report.failed, f"counterexamples: {report.counterexamples()}"
        assert report.summary()["fail"] == 0
        assert len(report.checks) == len(report.group_names) * len(LemmaId)
        assert "E6.1" in report.group_names and "S4" in report.group_names

    async def test_report_layout(self):
        report = (await self.service.verify_all(SweepConfig(max_order=6, exhaustive_order=3))).value
        assert list(report.group_names) == sorted(report.group_names)
        keys = [(c.group_descriptor, c.lemma_id.value) for c in report.checks]
        assert keys == sorted(keys)
        data = report.to_dict()
        assert data["groups"] == len(report.group_names)
        assert set(data["per_lemma"]) == {lemma.value for lemma in LemmaId}
        assert data["run"]["jobs"] == 1
        assert "run" not in report.to_dict(include_run=False)

    async def test_group_files_join_the_sweep(self, write_group_file):
        path = write_group_file("extra.json", Z2_TABLE)
        config = SweepConfig(max_order=4, exhaustive_order=2, group_files=(path,))
        report = (await self.service.verify_all(config)).value
        assert "file:extra" in report.group_names
        assert not report.failed

    async def test_corrupt_group_file_aborts(self, write_group_file):
        path = write_group_file("broken.json", "{ not json")
        result = await self.service.verify_all(SweepConfig(max_order=4, exhaustive_order=2, group_files=(path,)))
        assert result.is_error
        assert "GroupFileError" in result.error

    async def test_duplicate_file_names_abort(self, write_group_file, tmp_path):
        first = write_group_file("same.json", Z2_TABLE)
        (tmp_path / "other").mkdir()
        second = str(tmp_path / "other" / "same.json")
        (tmp_path / "other" / "same.json").write_text(open(first, encoding="utf-8").read(), encoding="utf-8")
        result = await self.service.verify_all(
            SweepConfig(max_order=2, exhaustive_order=1, group_files=(first, second))
        )
        assert result.is_error
        assert "duplicate group name file:same" in result.error

    async def test_parallel_run_matches_serial(self):
        serial = (await self.service.verify_all(SweepConfig(max_order=10, exhaustive_order=4, jobs=1))).value
        parallel = (await self.service.verify_all(SweepConfig(max_order=10, exhaustive_order=4, jobs=2))).value
        assert serial.to_dict(include_run=False) == parallel.to_dict(include_run=False)
        assert parallel.jobs == 2

    async def test_cyclic_only_has_no_vacuous_hypothesis_checks(self):
        config = SweepConfig(max_order=16, exhaustive_order=5, cyclic_only=True)
        report = (await self.service.verify_all(config)).value
        assert "Z2xZ2" not in report.group_names
        assert "Z2xZ3" in report.group_names
        vacuous = [c for c in report.checks if c.vacuous and c.lemma_id in ALMOST_CYCLIC_HYPOTHESIS]
        assert vacuous == [], f"vacuous checks on cyclic groups: {vacuous}"

    async def test_failed_check_marks_report(self, monkeypatch):
        def failing_sweep(G, name, factors=None, cap=64):
            return [LemmaCheckResult(LemmaId.CENTER, name, False, counterexample={"element": 0})]

        monkeypatch.setattr(sweep_module, "sweep_group", failing_sweep)
        report = (await self.service.verify_all(SweepConfig(max_order=3, exhaustive_order=0))).value
        assert report.failed
        assert report.summary() == {"pass": 0, "fail": 3, "vacuous": 0}
        assert report.counterexamples()[0] == {"lemma": "center", "group": "Z1", "counterexample": {"element": 0}}
