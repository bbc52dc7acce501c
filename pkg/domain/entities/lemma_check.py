# domain/entities/lemma_check.py
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Dict, FrozenSet, Optional, Tuple

from domain.entities.finite_group import FiniteGroup


class LemmaId(str, Enum):
    """Identifiers of the finitely checkable statements"""
    CENTER = "center"
    UNION_OF_CONJUGATES = "union_of_conjugates"
    FINITE_AC_IFF_CYCLIC = "finite_ac_iff_cyclic"
    QUOTIENT_CONJGEN = "quotient_conjgen"
    CONJUGATE_INTERSECTION = "conjugate_intersection"
    NORMAL_INTERSECTION = "normal_intersection"
    CYCLIC_QUOTIENT = "cyclic_quotient"
    PRIME_ORDER_CONJGEN = "prime_order_conjgen"
    EXPONENT = "exponent"
    ABELIAN_COROLLARY = "abelian_corollary"
    CENTRAL_SUBGROUP_CYCLIC = "central_subgroup_cyclic"
    NORMAL_CLOSURE = "normal_closure"
    CLASS_COUNT_BOUND = "class_count_bound"
    PRODUCT_FACTORS = "product_factors"


# Checks whose only hypothesis is that G has a conjugate generator
ALMOST_CYCLIC_HYPOTHESIS: FrozenSet[LemmaId] = frozenset({
    LemmaId.CENTER,
    LemmaId.QUOTIENT_CONJGEN,
    LemmaId.EXPONENT,
    LemmaId.ABELIAN_COROLLARY,
    LemmaId.CENTRAL_SUBGROUP_CYCLIC,
    LemmaId.NORMAL_CLOSURE,
    LemmaId.CLASS_COUNT_BOUND,
})


@dataclass(frozen=True)
class LemmaCheckResult:
    """Outcome of one lemma on one group.

    A failed result always carries a counterexample made of element
    indices, so it can be re-evaluated against the Cayley table.
    """
    lemma_id: LemmaId
    group_descriptor: str
    passed: bool
    vacuous: bool = False
    counterexample: Optional[Dict[str, Any]] = None
    details: str = ""
    witness: Optional[Dict[str, Any]] = None

    def __post_init__(self):
        if not self.passed and self.counterexample is None:
            raise ValueError(f"{self.lemma_id.value}: a failed check needs a counterexample")
        if self.vacuous and not self.passed:
            raise ValueError(f"{self.lemma_id.value}: a vacuous check cannot fail")

    @property
    def status(self) -> str:
        if not self.passed:
            return "fail"
        return "vacuous" if self.vacuous else "pass"

    def for_group(self, descriptor: str) -> 'LemmaCheckResult':
        return replace(self, group_descriptor=descriptor)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lemma": self.lemma_id.value,
            "group": self.group_descriptor,
            "passed": self.passed,
            "vacuous": self.vacuous,
            "counterexample": self.counterexample,
        }


@dataclass(frozen=True)
class ConjGenCertificate:
    """Witness that x is a conjugate generator.

    ``witnesses[y] = (a, n)`` with a * y * a^-1 = x^n.
    """
    generator: int
    witnesses: Tuple[Tuple[int, int], ...] = field(default_factory=tuple)

    def witness_for(self, y: int) -> Tuple[int, int]:
        return self.witnesses[y]

    def first_failure(self, G: FiniteGroup) -> Optional[int]:
        """First element whose recorded witness does not evaluate correctly"""
        if len(self.witnesses) != G.order:
            return min(len(self.witnesses), G.order)
        for y, (a, n) in enumerate(self.witnesses):
            conjugated = G.table[G.table[a][y]][G.inverses[a]]
            x_power = G.identity
            for _ in range(n):
                x_power = G.table[x_power][self.generator]
            if conjugated != x_power:
                return y
        return None

    def replay(self, G: FiniteGroup) -> bool:
        return self.first_failure(G) is None
