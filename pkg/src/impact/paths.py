"""Simulação de trajetórias de preço nas duas famílias de dinâmica."""

import logging
import math
from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from src.core.errors import DomainError
from src.core.models import ExecutionStrategy, MarketParams, OrderSpec, ScenarioSpec
from src.impact.functions import perm_impact, propagator_profile, temp_impact

logger = logging.getLogger(__name__)


class PricePath(BaseModel):
    """Preços (p_1, …, p_K) e o ruído (χ_1, …, χ_K) que os gerou."""
    model_config = ConfigDict(frozen=True)

    prices: Tuple[float, ...]
    noise: Tuple[float, ...]
    # algum fator (1 + I + ζ) ≤ 0: o preço cruzou zero
    degenerate: bool = False

    def as_array(self) -> np.ndarray:
        return np.asarray(self.prices, dtype=float)


def _conferir_ruido(noise: np.ndarray, intervals: int) -> None:
    if noise.shape[-1] != intervals:
        raise DomainError(
            f"Ruído com {noise.shape[-1]} entradas, esperado K = {intervals}",
            details={"shape": list(noise.shape)},
        )


def ac_prices(order: OrderSpec, shares: np.ndarray, params: MarketParams,
              noise: np.ndarray) -> np.ndarray:
    """Preços AC para uma ou várias linhas de ruído (última dimensão = K).

    p_k = p0 + Σ_{j<k}[σ√Δt χ_j − Δt g(n_j/Δt)] − h(n_k/Δt)
    """
    dt = order.dt
    taxa = shares / dt
    incremento = params.sigma * math.sqrt(dt) * noise - dt * perm_impact(taxa, params, order.xi)
    acumulado = np.cumsum(incremento, axis=-1) - incremento
    return params.p0 + acumulado - temp_impact(taxa, params, order.xi)


def geometric_factors(order: OrderSpec, shares: np.ndarray, scenario: ScenarioSpec,
                      noise: np.ndarray) -> np.ndarray:
    """Fatores (1 + I(n_k) + ζ_k), com ζ_k = σ√Δt χ_k."""
    params = scenario.params
    impacto = propagator_profile(scenario.impact, shares, params, order.xi, order.dt)
    return 1.0 + impacto + params.sigma * math.sqrt(order.dt) * noise


def simulate_path_ac(order: OrderSpec, strategy: ExecutionStrategy, params: MarketParams,
                     noise) -> PricePath:
    """Trajetória de preço da dinâmica aritmética de Almgren-Chriss."""
    chi = np.asarray(noise, dtype=float)
    _conferir_ruido(chi, order.intervals)
    precos = ac_prices(order, strategy.as_array(), params, chi)
    return PricePath(prices=tuple(precos.tolist()), noise=tuple(chi.tolist()))


def simulate_path_geometric(order: OrderSpec, strategy: ExecutionStrategy,
                            scenario: ScenarioSpec, noise) -> PricePath:
    """Trajetória p_k = p_{k−1}(1 + I(n_k) + ζ_k) dos modelos de propagador."""
    if not scenario.geometric:
        raise DomainError("Cenário não usa dinâmica geométrica",
                          details={"dynamics": scenario.dynamics.value})
    chi = np.asarray(noise, dtype=float)
    _conferir_ruido(chi, order.intervals)
    fatores = geometric_factors(order, strategy.as_array(), scenario, chi)
    degenerado = bool(np.any(fatores <= 0))
    if degenerado:
        logger.debug("Trajetória geométrica degenerada: fatores %s", fatores.tolist())
    precos = scenario.params.p0 * np.cumprod(fatores)
    return PricePath(prices=tuple(precos.tolist()), noise=tuple(chi.tolist()),
                     degenerate=degenerado)
