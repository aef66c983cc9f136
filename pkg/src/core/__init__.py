"""Módulo core - Tipos de domínio, validação e aritmética de estratégias."""

from .errors import (
    BenchmarkError, ConfigError, DomainError, FitError, SamplingLimitError,
    StrategyValidationError, TCAError,
)
from .models import (
    Configuracao, Dynamics, ExecutionStrategy, ImpactKind, MarketParams, OrderSpec,
    ReturnsKind, ReturnsSpec, ScenarioSpec, Side, UtilityKind, UtilitySpec,
)
from .strategy import remaining_shares, twap_strategy, validate
from .scenarios import get_scenario
from .cache import NoiseCache

__all__ = [
    "BenchmarkError", "ConfigError", "DomainError", "FitError", "SamplingLimitError",
    "StrategyValidationError", "TCAError",
    "Configuracao", "Dynamics", "ExecutionStrategy", "ImpactKind", "MarketParams",
    "OrderSpec", "ReturnsKind", "ReturnsSpec", "ScenarioSpec", "Side", "UtilityKind",
    "UtilitySpec",
    "remaining_shares", "twap_strategy", "validate", "get_scenario", "NoiseCache",
]
