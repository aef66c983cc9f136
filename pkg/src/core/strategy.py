"""Aritmética de estratégias de execução."""

import math
from typing import List, Optional

import numpy as np

from src.core.errors import StrategyValidationError
from src.core.models import ExecutionStrategy, OrderSpec, ScenarioSpec


def remaining_shares(strategy: ExecutionStrategy) -> np.ndarray:
    """Ações ainda não executadas ao fim de cada intervalo, (x_1, …, x_K).

    x_k = N − Σ_{j≤k} n_j, logo x_K = 0 para uma estratégia válida.
    """
    strategy.check()
    n = strategy.as_array()
    return strategy.total_shares - np.cumsum(n)


def twap_strategy(order: OrderSpec) -> ExecutionStrategy:
    """Estratégia uniforme no tempo: n_k = N/K."""
    K = order.intervals
    return ExecutionStrategy.from_array(np.full(K, order.total_shares / K), order.total_shares)


def validate(order: OrderSpec, strategy: ExecutionStrategy,
             scenario: Optional[ScenarioSpec] = None) -> List[str]:
    """Agrega todas as violações de invariantes; lista vazia significa ok."""
    erros: List[str] = []

    valores_ordem = (order.total_shares, order.horizon, order.dt)
    if not all(math.isfinite(v) for v in valores_ordem):
        erros.append("ordem com NaN/Inf")
    elif not math.isclose(order.intervals * order.dt, order.horizon, rel_tol=1e-12):
        erros.append(f"K·Δt = {order.intervals * order.dt} difere de T = {order.horizon}")

    if strategy.intervals != order.intervals:
        erros.append(
            f"estratégia com {strategy.intervals} intervalos, ordem com K = {order.intervals}"
        )
    if not math.isclose(strategy.total_shares, order.total_shares, rel_tol=1e-9):
        erros.append(
            f"N da estratégia ({strategy.total_shares}) difere do N da ordem ({order.total_shares})"
        )
    erros.extend(strategy.violations())

    if scenario is not None:
        erros.extend(scenario.violations())
    return erros


def require_valid(order: OrderSpec, strategy: ExecutionStrategy,
                  scenario: Optional[ScenarioSpec] = None) -> None:
    """Levanta StrategyValidationError se `validate` encontrar violações."""
    erros = validate(order, strategy, scenario)
    if erros:
        raise StrategyValidationError(erros, details={"shares": list(strategy.shares)})
