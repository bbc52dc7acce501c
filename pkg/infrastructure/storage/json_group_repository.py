# infrastructure/storage/json_group_repository.py
"""Group files: {"order", "table", "labels"} or {"degree", "generators"}"""
import json
import logging
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, Field, ValidationError, model_validator

from domain.algebra.finite_group_core import (
    DEFAULT_CLOSURE_CAP,
    DEFAULT_FULL_SCAN_MAX,
    DEFAULT_ORDER_CAP,
    group_from_permutations,
    group_from_table,
)
from domain.entities.finite_group import FiniteGroup
from domain.errors import GroupFileError, OrderCapExceeded
from domain.repositories.group_repository import GroupRepository
from infrastructure.parsers.cycle_notation_parser import parse_permutation


class GroupFileModel(BaseModel):
    """Schema of a group file"""
    order: Optional[int] = Field(default=None, description="Number of elements (table form)")
    table: Optional[List[List[int]]] = Field(default=None, description="Cayley table, row a column b holds a*b")
    labels: Optional[List[str]] = Field(default=None, description="Optional element labels")
    degree: Optional[int] = Field(default=None, description="Permutation degree (permutation form)")
    generators: Optional[List[str]] = Field(default=None, description="Generators in cycle notation, 0-based")

    @model_validator(mode="after")
    def exactly_one_form(self) -> "GroupFileModel":
        table_form = self.order is not None or self.table is not None
        permutation_form = self.degree is not None or self.generators is not None
        if table_form == permutation_form:
            raise ValueError("expected either order/table or degree/generators")
        if table_form and (self.order is None or self.table is None):
            raise ValueError("table form needs both order and table")
        if permutation_form and self.generators is None:
            raise ValueError("permutation form needs generators")
        return self


class JsonGroupRepository(GroupRepository):
    """Reads and writes UTF-8 JSON group files"""

    def __init__(
        self,
        max_order: int = DEFAULT_ORDER_CAP,
        closure_cap: int = DEFAULT_CLOSURE_CAP,
        full_scan_max: int = DEFAULT_FULL_SCAN_MAX,
    ):
        self.max_order = max_order
        self.closure_cap = closure_cap
        self.full_scan_max = full_scan_max
        self.logger = logging.getLogger(__name__)

    def _read_model(self, path: str) -> GroupFileModel:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise GroupFileError(path, e.strerror or str(e)) from e
        try:
            return GroupFileModel.model_validate_json(text)
        except ValidationError as e:
            first = e.errors()[0]
            where = ".".join(str(part) for part in first["loc"]) or "document"
            raise GroupFileError(path, f"{where}: {first['msg']}") from e

    def load_group(self, path: str) -> FiniteGroup:
        model = self._read_model(path)
        if model.table is not None:
            if model.order > self.max_order:
                raise OrderCapExceeded(model.order, self.max_order, "load_group")
            group = group_from_table(model.order, model.table, model.labels, full_scan_max=self.full_scan_max)
        else:
            degree = model.degree
            if degree is None:
                degree = max((parse_permutation(text).degree for text in model.generators), default=0)
            gens = [parse_permutation(text, degree) for text in model.generators]
            group = group_from_permutations(gens, degree, closure_cap=self.closure_cap)
            if group.order > self.max_order:
                raise OrderCapExceeded(group.order, self.max_order, "load_group")
        self.logger.debug("Loaded group of order %d from %s", group.order, path)
        return group

    def save_group(self, path: str, group: FiniteGroup) -> None:
        Path(path).write_text(json.dumps(group.to_dict(), indent=2) + "\n", encoding="utf-8")
        self.logger.debug("Saved group of order %d to %s", group.order, path)
