"""Cenários pré-definidos de dinâmica de preço e retornos.

Parâmetros de referência: γ = η = σ = Δt = 1, p0 = 1, ρ = 1/2, ε = 0.
"""

from typing import Dict

from src.core.errors import ConfigError
from src.core.models import (
    Dynamics, ImpactKind, MarketParams, ReturnsKind, ReturnsSpec, ScenarioSpec,
)

PARAMETROS_BASE = MarketParams(p0=1.0, sigma=1.0, gamma=1.0, eta=1.0, epsilon=0.0, rho=0.5)

_STUDENT_5 = ReturnsSpec(kind=ReturnsKind.STUDENT_T, nu=5, scale=1.0)

CENARIOS: Dict[str, ScenarioSpec] = {
    "scenario1": ScenarioSpec(
        name="scenario1", dynamics=Dynamics.ARITHMETIC_AC, impact=ImpactKind.AC_LINEAR,
        returns=ReturnsSpec(), params=PARAMETROS_BASE,
    ),
    "scenario2": ScenarioSpec(
        name="scenario2", dynamics=Dynamics.ARITHMETIC_AC, impact=ImpactKind.AC_LINEAR,
        returns=_STUDENT_5, params=PARAMETROS_BASE,
    ),
    "scenario3": ScenarioSpec(
        name="scenario3", dynamics=Dynamics.GEOMETRIC_PROPAGATOR, impact=ImpactKind.LIN_EXP,
        returns=ReturnsSpec(), params=PARAMETROS_BASE,
    ),
    "scenario4": ScenarioSpec(
        name="scenario4", dynamics=Dynamics.GEOMETRIC_PROPAGATOR, impact=ImpactKind.LIN_EXP,
        returns=_STUDENT_5, params=PARAMETROS_BASE,
    ),
}


def get_scenario(nome: str) -> ScenarioSpec:
    """Retorna o cenário pelo nome (scenario1..scenario4)."""
    try:
        return CENARIOS[nome.strip().lower()]
    except KeyError:
        raise ConfigError(
            f"Cenário desconhecido: {nome}",
            details={"disponiveis": sorted(CENARIOS)},
        ) from None


def listar_cenarios() -> Dict[str, str]:
    """Nome → descrição curta de cada cenário."""
    return {
        nome: f"{c.dynamics.value} / {c.impact.value} / {c.returns.kind.value}"
        for nome, c in CENARIOS.items()
    }
