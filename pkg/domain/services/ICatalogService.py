# domain/services/ICatalogService.py
from abc import ABC, abstractmethod
from typing import List, Optional, Sequence
from domain.entities.catalog_entry import CatalogEntry
from domain.utils.result import Result


class ICatalogService(ABC):  # Interfejs zgodny z konwencją C# dla czytelności
    """Interfejs serwisu katalogu grup"""

    @abstractmethod
    def build_catalog(self, max_order: int) -> Result[List[CatalogEntry], str]:
        """Buduje katalog grup do zadanego rzędu"""
        pass

    @abstractmethod
    def get_entry(self, name: str, max_order: Optional[int] = None) -> Result[CatalogEntry, str]:
        """Pobiera grupę z katalogu po nazwie"""
        pass

    @abstractmethod
    def enumerate_groups(self, order: int, search_order: Optional[Sequence[int]] = None) -> Result[List[CatalogEntry], str]:
        """Wylicza wszystkie grupy danego rzędu z dokładnością do izomorfizmu"""
        pass
