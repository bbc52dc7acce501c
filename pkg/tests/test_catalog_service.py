import pytest

from application.services.catalog_service import CatalogService, build_catalog, cyclic_only, enumerate_entries
from domain.algebra.finite_group_core import is_cyclic
from domain.errors import OrderCapExceeded


class TestBuildCatalog:
    def test_names_up_to_eight(self):
        names = {entry.name for entry in build_catalog(8)}
        expected = {f"Z{n}" for n in range(1, 9)} | {
            "D3", "D4", "S3", "Q8", "Z3:Z2", "Z2xZ2", "Z2xZ3", "Z2xZ4", "Z2xZ2xZ2",
        }
        assert names == expected, f"unexpected catalog: {sorted(names ^ expected)}"

    def test_sorted_by_order_then_name(self):
        catalog = build_catalog(12)
        keys = [(entry.order, entry.name) for entry in catalog]
        assert keys == sorted(keys)
        assert len({entry.name for entry in catalog}) == len(catalog)

    def test_larger_families(self):
        names = {entry.name for entry in build_catalog(24)}
        assert {"A4", "S4", "Dic3", "Q16", "Z2xS3", "Z2xD4", "Z2xQ8", "Z2xA4", "Z2xZ2xZ6", "Z7:Z3"} <= names
        assert "Z7:Z3" not in {entry.name for entry in build_catalog(20)}
        assert "Z7:Z3" in {entry.name for entry in build_catalog(21)}

    def test_orders_match_constructions(self):
        by_name = {entry.name: entry for entry in build_catalog(24)}
        assert by_name["S4"].order == 24
        assert by_name["Q16"].order == 16
        assert by_name["Z2xZ2xZ6"].order == 24
        assert by_name["Z2xS3"].construction.to_dict() == {
            "family": "direct_product", "parameters": {}, "factors": ["Z2", "S3"],
        }
        assert by_name["D5"].construction.to_dict() == {"family": "dihedral", "parameters": {"n": 5}}

    def test_cap(self):
        with pytest.raises(OrderCapExceeded):
            build_catalog(65)
        with pytest.raises(OrderCapExceeded):
            build_catalog(30, cap=24)

    def test_cyclic_only(self):
        kept = cyclic_only(build_catalog(12))
        assert all(is_cyclic(entry.group).cyclic for entry in kept)
        assert {"Z6", "Z2xZ3", "Z12"} <= {entry.name for entry in kept}
        assert "Z2xZ2" not in {entry.name for entry in kept}


class TestEnumerateEntries:
    def test_names(self):
        entries = enumerate_entries(4)
        assert [entry.name for entry in entries] == ["E4.1", "E4.2"]
        assert entries[0].construction.to_dict() == {"family": "exhaustive", "parameters": {"order": 4, "index": 1}}


class TestCatalogService:
    def setup_method(self):
        self.service = CatalogService(order_cap=24, exhaustive_cap=6)

    def test_build_is_cached(self):
        first = self.service.build_catalog(12)
        second = self.service.build_catalog(12)
        assert first.is_success
        assert first.value is second.value

    def test_cap_is_an_error_result(self):
        result = self.service.build_catalog(30)
        assert result.is_error
        assert "OrderCapExceeded" in result.error

    def test_get_entry(self):
        result = self.service.get_entry("Q8", 8)
        assert result.is_success
        assert result.value.order == 8
        missing = self.service.get_entry("Q32", 24)
        assert missing.is_error
        assert "Unknown catalog group 'Q32'" in missing.error

    def test_enumerate_groups(self):
        assert len(self.service.enumerate_groups(6).value) == 2
        assert self.service.enumerate_groups(7).is_error
        assert self.service.enumerate_groups(4, search_order=[1, 2]).is_error
