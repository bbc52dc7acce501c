# domain/__init__.py
from .errors import GroupTheoryError
from .utils.result import Result
from .services.rop_service import ROPService

__all__ = [
    'GroupTheoryError',
    'Result',
    'ROPService'
]
