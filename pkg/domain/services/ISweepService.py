# domain/services/ISweepService.py
from abc import ABC, abstractmethod
from domain.entities.sweep_report import SweepConfig, SweepReport
from domain.utils.result import Result


class ISweepService(ABC):  # Interfejs zgodny z konwencją C# dla czytelności
    """Interfejs serwisu weryfikacji lematów"""

    @abstractmethod
    async def verify_all(self, config: SweepConfig) -> Result[SweepReport, str]:
        """Uruchamia wszystkie sprawdzenia na katalogu"""
        pass
