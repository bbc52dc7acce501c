# application/dto/group_analysis.py
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple


@dataclass
class GroupAnalysis:
    """Summary of one finite group for the `group analyze` command"""
    order: int
    labels: List[str]
    element_orders: List[int]
    conjugacy_classes: List[List[int]]
    center: List[int]
    commutator_subgroup: List[int]
    abelian: bool
    cyclic: bool
    cyclic_witness: Optional[int]
    conjugate_generators: List[int]
    almost_cyclic: bool
    # (a, n) per element for the first conjugate generator
    certificate: Optional[List[Tuple[int, int]]] = None
    simple: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "order": self.order,
            "labels": self.labels,
            "element_orders": self.element_orders,
            "conjugacy_classes": self.conjugacy_classes,
            "center": self.center,
            "commutator_subgroup": self.commutator_subgroup,
            "abelian": self.abelian,
            "cyclic": self.cyclic,
            "cyclic_witness": self.cyclic_witness,
            "simple": self.simple,
            "conjugate_generators": self.conjugate_generators,
            "almost_cyclic": self.almost_cyclic,
            "certificate": [list(w) for w in self.certificate] if self.certificate is not None else None,
        }


@dataclass
class SubgroupInfo:
    """One subgroup of a listing"""
    members: List[int]
    order: int
    normal: bool
    cyclic: bool
    conjugates: int
    labels: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "members": self.members,
            "labels": self.labels,
            "order": self.order,
            "normal": self.normal,
            "cyclic": self.cyclic,
            "conjugates": self.conjugates,
        }
