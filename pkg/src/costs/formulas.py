"""Fórmulas de custo de transação e momentos analíticos do modelo AC.

Convenção de sinal: custo positivo significa desempenho melhor que o
benchmark; uma venda que paga impacto tem custo esperado negativo.
"""

import math

import numpy as np

from src.core.errors import DomainError
from src.core.models import ExecutionStrategy, MarketParams, OrderSpec, ScenarioSpec
from src.core.strategy import remaining_shares
from src.costs.models import FillSequence
from src.impact.functions import perm_impact, temp_impact
from src.impact.paths import geometric_factors


def cost_is(fills: FillSequence, p0: float, xi: int, total_shares: float) -> float:
    """Shortfall de implementação: c = ξ[(1/N)Σ n_k p_k − p0]."""
    if not total_shares > 0:
        raise DomainError(f"N deve ser positivo (recebido {total_shares})")
    fills.check(total_shares)
    return xi * (fills.notional() / total_shares - p0)


def _remanescente(order: OrderSpec, shares: np.ndarray) -> np.ndarray:
    return remaining_shares(ExecutionStrategy.from_array(shares, order.total_shares))


def cost_ac_matrix(order: OrderSpec, shares: np.ndarray, params: MarketParams,
                   noise: np.ndarray) -> np.ndarray:
    """Forma fechada do custo AC para cada linha de `noise` (caminhos × K)."""
    dt = order.dt
    N = order.total_shares
    x = _remanescente(order, shares)
    taxa = shares / dt
    impacto_temp = float(np.dot(shares, temp_impact(taxa, params, order.xi)))
    deriva = dt * perm_impact(taxa, params, order.xi)
    ruido = params.sigma * math.sqrt(dt) * noise
    return order.xi / N * ((ruido - deriva) @ x - impacto_temp)


def cost_ac_closed(order: OrderSpec, strategy: ExecutionStrategy, params: MarketParams,
                   noise) -> float:
    """c = (ξ/N)[Σ_k (σ√Δt χ_k − Δt g(n_k/Δt)) x_k − Σ_k n_k h(n_k/Δt)]."""
    chi = np.asarray(noise, dtype=float)
    if chi.shape != (order.intervals,):
        raise DomainError(f"Ruído deve ter K = {order.intervals} entradas")
    return float(cost_ac_matrix(order, strategy.as_array(), params, chi))


def cost_geometric_matrix(order: OrderSpec, shares: np.ndarray, scenario: ScenarioSpec,
                          noise: np.ndarray):
    """Custos geométricos por linha de ruído e número de caminhos degenerados."""
    fatores = geometric_factors(order, shares, scenario, noise)
    degenerados = int(np.count_nonzero(np.any(fatores <= 0, axis=-1)))
    trajetoria = np.cumprod(fatores, axis=-1)
    custos = order.xi * scenario.params.p0 * (trajetoria @ shares / order.total_shares - 1.0)
    return custos, degenerados


def cost_geometric(order: OrderSpec, strategy: ExecutionStrategy, scenario: ScenarioSpec,
                   noise) -> float:
    """c = ξ p0 [(1/N) Σ_k n_k Π_{j≤k}(1 + I(n_j) + ζ_j) − 1]."""
    if not scenario.geometric:
        raise DomainError("Cenário não usa dinâmica geométrica")
    chi = np.asarray(noise, dtype=float)
    if chi.shape != (order.intervals,):
        raise DomainError(f"Ruído deve ter K = {order.intervals} entradas")
    custos, _ = cost_geometric_matrix(order, strategy.as_array(), scenario, chi)
    return float(custos)


def expected_cost_ac(order: OrderSpec, strategy: ExecutionStrategy,
                     params: MarketParams) -> float:
    """E[c] = −(ξ/N) Σ {x_k Δt g(n_k/Δt) + n_k h(n_k/Δt)}."""
    n = strategy.as_array()
    x = remaining_shares(strategy)
    dt = order.dt
    taxa = n / dt
    soma = np.dot(x, dt * perm_impact(taxa, params, order.xi)) + np.dot(
        n, temp_impact(taxa, params, order.xi))
    return float(-order.xi / order.total_shares * soma)


def variance_ac(order: OrderSpec, strategy: ExecutionStrategy, params: MarketParams) -> float:
    """V[c] = (σ²Δt/N²) Σ x_k²."""
    x = remaining_shares(strategy)
    return float(params.sigma ** 2 * order.dt / order.total_shares ** 2 * np.dot(x, x))


def ac_utility(order: OrderSpec, strategy: ExecutionStrategy, params: MarketParams,
               lam: float) -> float:
    """U = −(1−λ)E[c] + λV[c]."""
    return (-(1.0 - lam) * expected_cost_ac(order, strategy, params)
            + lam * variance_ac(order, strategy, params))
