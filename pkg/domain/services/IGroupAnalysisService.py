# domain/services/IGroupAnalysisService.py
from abc import ABC, abstractmethod
from typing import Any, List
from domain.entities.finite_group import FiniteGroup
from domain.utils.result import Result


class IGroupAnalysisService(ABC):  # Interfejs zgodny z konwencją C# dla czytelności
    """Interfejs serwisu analizy grup skończonych"""

    @abstractmethod
    def load_group(self, path: str) -> Result[FiniteGroup, str]:
        """Wczytuje grupę z pliku JSON"""
        pass

    @abstractmethod
    def save_group(self, path: str, group: FiniteGroup) -> Result[str, str]:
        """Zapisuje grupę do pliku JSON"""
        pass

    @abstractmethod
    def analyze_group(self, group: FiniteGroup) -> Result[Any, str]:
        """Rzędy, klasy sprzężoności, centrum, generatory sprzężone"""
        pass

    @abstractmethod
    def list_subgroups(self, group: FiniteGroup) -> Result[List[Any], str]:
        """Wszystkie podgrupy z informacją o normalności"""
        pass
