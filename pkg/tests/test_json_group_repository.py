import json

import pytest

from domain.algebra.finite_group_core import is_abelian
from domain.algebra.standard_groups import symmetric_group
from domain.errors import GroupConstructionError, GroupFileError, OrderCapExceeded, ParseSyntaxError
from infrastructure.storage.json_group_repository import GroupFileModel, JsonGroupRepository


class TestGroupFileModel:
    def test_exactly_one_form(self):
        with pytest.raises(ValueError):
            GroupFileModel(order=2, table=[[0, 1], [1, 0]], generators=["(0 1)"])
        with pytest.raises(ValueError):
            GroupFileModel()
        with pytest.raises(ValueError):
            GroupFileModel(order=2)


class TestJsonGroupRepository:
    def setup_method(self):
        self.repository = JsonGroupRepository(max_order=24)

    def test_table_form(self, write_group_file):
        path = write_group_file("z3.json", {"order": 3, "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]],
                                            "labels": ["e", "a", "b"]})
        G = self.repository.load_group(path)
        assert G.order == 3
        assert G.label(1) == "a"

    def test_permutation_form(self, write_group_file):
        path = write_group_file("s3.json", {"generators": ["(0 1 2)", "(0 1)"]})
        G = self.repository.load_group(path)
        assert G.order == 6
        assert not is_abelian(G)

    def test_permutation_degree(self, write_group_file):
        path = write_group_file("bad.json", {"degree": 2, "generators": ["(0 2)"]})
        with pytest.raises(ParseSyntaxError):
            self.repository.load_group(path)

    def test_invalid_table(self, write_group_file):
        path = write_group_file("loop.json", {"order": 2, "table": [[0, 1], [1, 1]]})
        with pytest.raises(GroupConstructionError):
            self.repository.load_group(path)

    @pytest.mark.parametrize("document", [
        "{ not json",
        "[1, 2]",
        json.dumps({"order": "two", "table": [[0]]}),
        json.dumps({"degree": 3}),
    ])
    def test_malformed_documents(self, write_group_file, document):
        path = write_group_file("broken.json", document)
        with pytest.raises(GroupFileError) as excinfo:
            self.repository.load_group(path)
        assert excinfo.value.path == path

    def test_missing_file(self, tmp_path):
        with pytest.raises(GroupFileError):
            self.repository.load_group(str(tmp_path / "absent.json"))

    def test_order_cap(self, write_group_file):
        path = write_group_file("s5.json", {"generators": ["(0 1 2 3 4)", "(0 1)"]})
        with pytest.raises(OrderCapExceeded):
            self.repository.load_group(path)
        big = write_group_file("z30.json", {"order": 30, "table": [[(a + b) % 30 for b in range(30)] for a in range(30)]})
        with pytest.raises(OrderCapExceeded):
            self.repository.load_group(big)

    def test_save_and_load(self, tmp_path):
        S4 = symmetric_group(4)
        path = str(tmp_path / "s4.json")
        self.repository.save_group(path, S4)
        assert self.repository.load_group(path) == S4
        assert json.loads((tmp_path / "s4.json").read_text(encoding="utf-8"))["order"] == 24
