# domain/entities/__init__.py
from .catalog_entry import CatalogEntry, Provenance
from .finite_group import CosetQuotient, FiniteGroup, SubgroupHandle
from .lemma_check import ConjGenCertificate, LemmaCheckResult, LemmaId
from .permutation import Permutation
from .presentation import (
    AbelianInvariants,
    JustificationStep,
    OneRelatorVerdict,
    Presentation,
    VerdictClassification,
)
from .sweep_report import SweepConfig, SweepReport
from .word import Alphabet, Word

__all__ = [
    'AbelianInvariants',
    'Alphabet',
    'CatalogEntry',
    'ConjGenCertificate',
    'CosetQuotient',
    'FiniteGroup',
    'JustificationStep',
    'LemmaCheckResult',
    'LemmaId',
    'OneRelatorVerdict',
    'Permutation',
    'Presentation',
    'Provenance',
    'SubgroupHandle',
    'SweepConfig',
    'SweepReport',
    'VerdictClassification',
    'Word',
]
