# presentation/cli/models.py
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class GroupAnalysisResponse(BaseModel):
    """Response model for `group analyze`"""
    order: int = Field(..., description="Number of elements")
    labels: List[str] = Field(..., description="Element labels, index 0 is the identity")
    element_orders: List[int] = Field(..., description="Order of each element")
    conjugacy_classes: List[List[int]] = Field(..., description="Classes ordered by smallest member")
    center: List[int] = Field(..., description="Members of Z(G)")
    commutator_subgroup: List[int] = Field(..., description="Members of [G, G]")
    abelian: bool = Field(..., description="Whether G is abelian")
    cyclic: bool = Field(..., description="Whether G is cyclic")
    cyclic_witness: Optional[int] = Field(default=None, description="A generator when G is cyclic")
    simple: bool = Field(..., description="Whether G is simple")
    conjugate_generators: List[int] = Field(..., description="Elements whose powers meet every conjugacy class")
    almost_cyclic: bool = Field(..., description="Whether G has a conjugate generator")
    certificate: Optional[List[List[int]]] = Field(
        default=None, description="(a, n) per element with a y a^-1 = x^n for the first conjugate generator"
    )


class SubgroupResponse(BaseModel):
    """Response model for one subgroup"""
    members: List[int] = Field(..., description="Sorted element indices")
    labels: List[str] = Field(..., description="Element labels")
    order: int = Field(..., description="Subgroup order")
    normal: bool = Field(..., description="Whether the subgroup is normal")
    cyclic: bool = Field(..., description="Whether the subgroup is cyclic")
    conjugates: int = Field(..., description="Number of distinct conjugates")


class SubgroupListResponse(BaseModel):
    """Response model for `group subgroups`"""
    subgroups: List[SubgroupResponse] = Field(..., description="Subgroups sorted by (order, members)")
    total_count: int = Field(..., description="Number of subgroups")


class JustificationStepResponse(BaseModel):
    rule: str = Field(..., description="Operation behind the step")
    citation: str = Field(..., description="Statement the step relies on")
    data: Dict[str, Any] = Field(default_factory=dict, description="Output of the operation")


class VerdictResponse(BaseModel):
    """Response model for `presentation analyze`"""
    presentation: str = Field(..., description="Canonical form of the input")
    classification: str = Field(..., description="Verdict classification")
    justification: List[JustificationStepResponse] = Field(..., description="Ladder steps in order")
    transformed: Optional[str] = Field(default=None, description="Presentation the verdict applies to after rewriting")


class LemmaCheckResponse(BaseModel):
    lemma: str = Field(..., description="Lemma identifier")
    group: str = Field(..., description="Group name")
    passed: bool = Field(..., description="False only with a counterexample")
    vacuous: bool = Field(..., description="Hypothesis not met")
    counterexample: Optional[Dict[str, Any]] = Field(default=None, description="Element indices refuting the lemma")


class SweepReportResponse(BaseModel):
    """Response model for `verify`"""
    config: Dict[str, Any] = Field(..., description="Sweep configuration echo")
    groups: int = Field(..., description="Number of groups checked")
    group_names: List[str] = Field(..., description="Sorted group names")
    checks: List[LemmaCheckResponse] = Field(..., description="One record per (group, lemma)")
    summary: Dict[str, int] = Field(..., description="pass / fail / vacuous totals")
    per_lemma: Dict[str, Dict[str, int]] = Field(..., description="Totals per lemma")
    counterexamples: List[Dict[str, Any]] = Field(..., description="Failed checks")
    run: Optional[Dict[str, Any]] = Field(default=None, description="Timestamp, wall time and job count")


class GroupEntryResponse(BaseModel):
    """Response model for one named group"""
    name: str = Field(..., description="Unique name")
    order: int = Field(..., description="Group order")
    abelian: bool = Field(..., description="Whether the group is abelian")
    cyclic: bool = Field(..., description="Whether the group is cyclic")
    almost_cyclic: bool = Field(..., description="Whether the group has a conjugate generator")
    construction: Dict[str, Any] = Field(..., description="Family, parameters and factors")


class GroupListResponse(BaseModel):
    """Response model for `enumerate` and `catalog`"""
    groups: List[GroupEntryResponse] = Field(..., description="Groups sorted as produced")
    total_count: int = Field(..., description="Number of groups")
