# domain/entities/finite_group.py
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, FrozenSet, Optional, Tuple

import numpy as np


@dataclass(frozen=True)
class FiniteGroup:
    """Finite group given by its complete Cayley table.

    Instances are produced by ``finite_group_core.group_from_table`` (every
    other constructor funnels through it), so the group axioms hold and the
    identity is element 0.
    """
    order: int
    table: Tuple[Tuple[int, ...], ...]
    identity: int
    inverses: Tuple[int, ...]
    labels: Optional[Tuple[str, ...]] = None

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def label(self, a: int) -> str:
        if self.labels is not None:
            return self.labels[a]
        return str(a)

    @cached_property
    def array(self) -> np.ndarray:
        """Cayley table as an integer numpy array (read-only)"""
        arr = np.array(self.table, dtype=np.int64).reshape(self.order, self.order)
        arr.setflags(write=False)
        return arr

    @property
    def elements(self) -> range:
        return range(self.order)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"order": self.order, "table": [list(row) for row in self.table]}
        if self.labels is not None:
            data["labels"] = list(self.labels)
        return data

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"


@dataclass(frozen=True)
class SubgroupHandle:
    """Sorted element-index set of a subgroup of ``parent``"""
    parent: FiniteGroup = field(compare=False, hash=False, repr=False)
    members: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    @cached_property
    def member_set(self) -> FrozenSet[int]:
        return frozenset(self.members)

    def __contains__(self, element: int) -> bool:
        return element in self.member_set

    def is_trivial(self) -> bool:
        return self.size == 1

    def is_whole(self) -> bool:
        return self.size == self.parent.order

    def is_proper(self) -> bool:
        return self.size < self.parent.order

    def labels(self) -> Tuple[str, ...]:
        return tuple(self.parent.label(m) for m in self.members)


@dataclass(frozen=True)
class CosetQuotient:
    """G/N: the coset group plus the projection G -> G/N"""
    group: FiniteGroup
    projection: Tuple[int, ...]
    kernel: SubgroupHandle
    representatives: Tuple[int, ...]

    def project(self, element: int) -> int:
        return self.projection[element]
