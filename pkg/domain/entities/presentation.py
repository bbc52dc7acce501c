# domain/entities/presentation.py
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from domain.entities.word import Alphabet, Word
from domain.errors import AlphabetMismatch


@dataclass(frozen=True)
class Presentation:
    """< alphabet | relators >; relators are freely reduced words over the alphabet"""
    alphabet: Alphabet
    relators: Tuple[Word, ...] = ()

    def __post_init__(self):
        relators = tuple(self.relators)
        object.__setattr__(self, "relators", relators)
        for relator in relators:
            if relator.alphabet != self.alphabet:
                raise AlphabetMismatch(self.alphabet.names, relator.alphabet.names)

    @property
    def generators(self) -> Tuple[str, ...]:
        return self.alphabet.names

    def with_relators(self, relators: Tuple[Word, ...]) -> 'Presentation':
        return Presentation(self.alphabet, relators)

    def __str__(self) -> str:
        gens = ", ".join(self.alphabet.names)
        rels = ", ".join(str(r) for r in self.relators)
        left = f"< {gens} |" if gens else "< |"
        return f"{left} {rels} >" if rels else f"{left} >"


@dataclass(frozen=True)
class AbelianInvariants:
    """Z^free_rank x Z_d1 x ... x Z_dk with 2 <= d1 | d2 | ... | dk"""
    torsion: Tuple[int, ...]
    free_rank: int

    def __post_init__(self):
        torsion = tuple(int(d) for d in self.torsion)
        object.__setattr__(self, "torsion", torsion)
        if self.free_rank < 0:
            raise ValueError(f"negative free rank {self.free_rank}")
        for d in torsion:
            if d < 2:
                raise ValueError(f"torsion coefficient {d} is below 2")
        for a, b in zip(torsion, torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {list(torsion)} breaks the divisibility chain at {a}, {b}")

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def to_dict(self) -> Dict[str, Any]:
        return {"torsion": list(self.torsion), "free_rank": self.free_rank}

    def __str__(self) -> str:
        factors = ["Z"] * self.free_rank + [f"Z_{d}" for d in self.torsion]
        return " x ".join(factors) if factors else "1"


class VerdictClassification(str, Enum):
    NOT_ALMOST_CYCLIC = "NotAlmostCyclic"
    CYCLIC_CERTIFIED = "CyclicCertified"
    FINITE_CYCLIC_IF_ALMOST_CYCLIC = "FiniteCyclicIfAlmostCyclic"
    CYCLIC_IF_ALMOST_CYCLIC = "CyclicIfAlmostCyclic"
    SINGLE_GENERATOR = "SingleGenerator"


@dataclass(frozen=True)
class JustificationStep:
    """One rung of the verdict ladder: the operation, the statement it uses, its output"""
    rule: str
    citation: str
    data: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {"rule": self.rule, "citation": self.citation, "data": self.data}


@dataclass(frozen=True)
class OneRelatorVerdict:
    classification: VerdictClassification
    justification: Tuple[JustificationStep, ...]
    transformed: Optional[Presentation] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "classification": self.classification.value,
            "justification": [step.to_dict() for step in self.justification],
            "transformed": str(self.transformed) if self.transformed is not None else None,
        }
