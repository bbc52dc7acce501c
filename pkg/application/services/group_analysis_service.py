# application/services/group_analysis_service.py
import logging
from typing import List

from application.dto.group_analysis import GroupAnalysis, SubgroupInfo
from domain.algebra.almost_cyclic_analysis import conjugate_generators, is_conjugate_generator
from domain.algebra.finite_group_core import (
    DEFAULT_ORDER_CAP,
    all_subgroups,
    center,
    commutator_subgroup,
    conjugacy_classes,
    conjugates_of_subgroup,
    element_orders,
    is_abelian,
    is_cyclic,
    is_normal,
    is_simple,
    subgroup_is_cyclic,
)
from domain.entities.finite_group import FiniteGroup
from domain.repositories.group_repository import GroupRepository
from domain.services.IGroupAnalysisService import IGroupAnalysisService
from domain.services.rop_service import ROPService
from domain.utils.result import Result


class GroupAnalysisService(IGroupAnalysisService):
    """Structure of a single finite group: orders, classes, subgroups, conjugate generators"""

    def __init__(self, group_repository: GroupRepository, order_cap: int = DEFAULT_ORDER_CAP):
        self.group_repository = group_repository
        self.order_cap = order_cap
        self.rop_service = ROPService()
        self.logger = logging.getLogger(__name__)

    def load_group(self, path: str) -> Result[FiniteGroup, str]:
        return self.rop_service.try_catch(self.group_repository.load_group)(path)

    def save_group(self, path: str, group: FiniteGroup) -> Result[str, str]:
        def save(target: str) -> str:
            self.group_repository.save_group(target, group)
            return target
        return self.rop_service.try_catch(save, errors=(OSError,))(path)

    def analyze_group(self, group: FiniteGroup) -> Result[GroupAnalysis, str]:
        return self.rop_service.try_catch(self._analyze)(group)

    def list_subgroups(self, group: FiniteGroup) -> Result[List[SubgroupInfo], str]:
        return self.rop_service.try_catch(self._subgroups)(group)

    def _analyze(self, G: FiniteGroup) -> GroupAnalysis:
        gens = conjugate_generators(G)
        certificate = is_conjugate_generator(G, gens[0]) if gens else None
        cyclic = is_cyclic(G)
        self.logger.debug("Analyzed group of order %d: %d conjugate generators", G.order, len(gens))
        return GroupAnalysis(
            order=G.order,
            labels=[G.label(a) for a in G.elements],
            element_orders=element_orders(G),
            conjugacy_classes=[list(c) for c in conjugacy_classes(G)],
            center=list(center(G).members),
            commutator_subgroup=list(commutator_subgroup(G).members),
            abelian=is_abelian(G),
            cyclic=cyclic.cyclic,
            cyclic_witness=cyclic.witness,
            conjugate_generators=gens,
            almost_cyclic=bool(gens),
            certificate=list(certificate.witnesses) if certificate is not None else None,
            simple=is_simple(G),
        )

    def _subgroups(self, G: FiniteGroup) -> List[SubgroupInfo]:
        return [
            SubgroupInfo(
                members=list(H.members),
                order=H.size,
                normal=is_normal(G, H),
                cyclic=subgroup_is_cyclic(H),
                conjugates=len(conjugates_of_subgroup(G, H)),
                labels=list(H.labels()),
            )
            for H in all_subgroups(G, self.order_cap)
        ]
