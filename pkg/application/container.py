# application/container.py
from dependency_injector import containers, providers

from application.services.catalog_service import CatalogService
from application.services.group_analysis_service import GroupAnalysisService
from application.services.presentation_service import PresentationService
from application.services.sweep_service import SweepService
from infrastructure.config.environment.env_loader import EnvironmentLoader
from infrastructure.config.services.config_service import ConfigService
from infrastructure.storage.json_group_repository import JsonGroupRepository


class Container(containers.DeclarativeContainer):
    """Dependency Injection Container"""

    # Core Services
    env_loader = providers.Singleton(EnvironmentLoader)
    config_service = providers.Singleton(ConfigService, env_loader)

    limits = providers.Callable(lambda config_service: config_service.get_limits(), config_service)

    # Storage
    group_repository = providers.Singleton(
        JsonGroupRepository,
        max_order=limits.provided.max_order,
        closure_cap=limits.provided.closure_cap,
        full_scan_max=limits.provided.associativity_full_scan,
    )

    # Application Services
    group_analysis_service = providers.Singleton(
        GroupAnalysisService,
        group_repository,
        order_cap=limits.provided.max_order,
    )
    presentation_service = providers.Singleton(PresentationService)
    catalog_service = providers.Singleton(
        CatalogService,
        order_cap=limits.provided.max_order,
        exhaustive_cap=limits.provided.exhaustive_cap,
    )
    sweep_service = providers.Singleton(SweepService, group_repository)
