# domain/repositories/group_repository.py
from abc import ABC, abstractmethod
from domain.entities.finite_group import FiniteGroup


class GroupRepository(ABC):
    """Group file storage; failures raise GroupTheoryError subclasses"""

    @abstractmethod
    def load_group(self, path: str) -> FiniteGroup:
        """Load and validate a group file"""
        pass

    @abstractmethod
    def save_group(self, path: str, group: FiniteGroup) -> None:
        """Write a group as a table-form group file"""
        pass
