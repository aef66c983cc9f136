"""Funções de impacto de mercado.

x é a taxa de negociação n_k/Δt; ξ é o sinal da ordem (+1 venda, −1 compra).
"""

from typing import Union

import numpy as np

from src.core.errors import DomainError
from src.core.models import ImpactKind, MarketParams

ArrayLike = Union[float, np.ndarray]


def perm_impact(x: ArrayLike, params: MarketParams, xi: int) -> ArrayLike:
    """Impacto permanente g(x) = ξγx."""
    return xi * params.gamma * x


def temp_impact(x: ArrayLike, params: MarketParams, xi: int) -> ArrayLike:
    """Impacto temporário h(x) = ξ(ε + ηx^α); α = 1 no modelo linear."""
    if params.temp_exponent == 1.0:
        termo = params.eta * x
    else:
        termo = params.eta * np.power(x, params.temp_exponent)
    return xi * (params.epsilon + termo)


def propagator_impact(kind: ImpactKind, n_k: ArrayLike, k: ArrayLike,
                      params: MarketParams, xi: int, dt: float) -> ArrayLike:
    """Impacto I(n_k) do intervalo k nos modelos de propagador."""
    n_k = np.asarray(n_k, dtype=float)
    if np.any(n_k < 0):
        raise DomainError("n_k negativo no impacto de propagador", details={"n_k": n_k.tolist()})
    t = np.asarray(k, dtype=float) * dt

    if kind is ImpactKind.LIN_EXP:
        valor = -xi * params.gamma * n_k * np.exp(-params.rho * t)
    elif kind is ImpactKind.LIN_POW:
        if np.any(t <= 0):
            raise DomainError("LinPow exige kΔt > 0", details={"k": np.asarray(k).tolist(), "dt": dt})
        valor = -xi * params.gamma * n_k * np.power(t, -params.rho)
    elif kind is ImpactKind.SQRT:
        valor = -xi * params.gamma * np.sqrt(n_k)
    else:
        raise DomainError(f"Impacto {kind.value} não é de propagador")

    return float(valor) if np.ndim(valor) == 0 else valor


def propagator_profile(kind: ImpactKind, shares: np.ndarray, params: MarketParams,
                       xi: int, dt: float) -> np.ndarray:
    """Vetor (I(n_1), …, I(n_K)) de uma estratégia."""
    shares = np.asarray(shares, dtype=float)
    return propagator_impact(kind, shares, np.arange(1, shares.size + 1), params, xi, dt)
