# application/dto/__init__.py
from .group_analysis import GroupAnalysis, SubgroupInfo

__all__ = ["GroupAnalysis", "SubgroupInfo"]
