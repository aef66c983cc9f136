"""Laboratório de Custos de Execução - Pacote principal."""

__version__ = "1.0.0"
__author__ = "TCA Lab Team"

from src.core.models import ExecutionStrategy, OrderSpec, ScenarioSpec, UtilitySpec

__all__ = ["ExecutionStrategy", "OrderSpec", "ScenarioSpec", "UtilitySpec"]
