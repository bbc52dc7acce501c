# domain/entities/catalog_entry.py
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from domain.entities.finite_group import FiniteGroup


@dataclass(frozen=True)
class Provenance:
    """How a catalog group was built: family plus its parameters"""
    family: str
    parameters: Tuple[Tuple[str, int], ...] = ()
    factors: Optional[Tuple[str, ...]] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"family": self.family, "parameters": dict(self.parameters)}
        if self.factors is not None:
            data["factors"] = list(self.factors)
        return data


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    group: FiniteGroup
    construction: Provenance
    # groups of the factors, kept for product checks
    factor_groups: Optional[Tuple[FiniteGroup, FiniteGroup]] = field(default=None, compare=False, repr=False)

    @property
    def order(self) -> int:
        return self.group.order
