# domain/services/IPresentationService.py
from abc import ABC, abstractmethod
from domain.entities.presentation import AbelianInvariants, OneRelatorVerdict, Presentation
from domain.utils.result import Result


class IPresentationService(ABC):  # Interfejs zgodny z konwencją C# dla czytelności
    """Interfejs serwisu analizy prezentacji"""

    @abstractmethod
    def parse(self, text: str) -> Result[Presentation, str]:
        """Parsuje prezentację"""
        pass

    @abstractmethod
    def abelianize(self, text: str) -> Result[AbelianInvariants, str]:
        """Liczy abelianizację"""
        pass

    @abstractmethod
    def rewrite(self, text: str) -> Result[Presentation, str]:
        """Przepisuje relator do zerowej sumy wykładników"""
        pass

    @abstractmethod
    def analyze(self, text: str) -> Result[OneRelatorVerdict, str]:
        """Werdykt dla prezentacji z jednym relatorem"""
        pass

    @abstractmethod
    def analyze_presentation(self, presentation: Presentation) -> Result[OneRelatorVerdict, str]:
        """Werdykt dla sparsowanej prezentacji"""
        pass
