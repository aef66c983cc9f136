"""Modelos do otimizador: orçamento, avaliações e resultados."""

from enum import Enum
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.core.models import ExecutionStrategy, OrderSpec, ScenarioSpec


class Method(str, Enum):
    """Métodos de minimização."""

    GD = "gd"
    MC = "mc"
    FIT_MC = "fit_mc"
    FIT_GD = "fit_gd"

    @property
    def rotulo(self) -> str:
        return {"gd": "GD", "mc": "MC", "fit_mc": "Fit + MC", "fit_gd": "Fit + GD"}[self.value]


LAMBDA_GRID_PADRAO = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0]
C_TILDE_GRID_PADRAO = [-1.0, -0.5, 0.0, 0.5, 1.0]


class Budget(BaseModel):
    """Orçamento computacional; campos ausentes recebem padrões por cenário."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    q_target: Optional[int] = Field(None, ge=2)
    path_count: Optional[int] = Field(None, ge=1)
    degree: Optional[int] = None
    master_seed: int = Field(42, ge=0, lt=2 ** 64)
    methods: List[Method] = Field(default_factory=lambda: [Method.FIT_GD])
    crn: bool = True
    workers: int = Field(1, ge=1)
    max_raw: int = Field(10 ** 7, ge=1)
    gd_max_iter: int = Field(200, ge=1)
    lambda_grid: List[float] = Field(default_factory=lambda: list(LAMBDA_GRID_PADRAO))
    c_tilde_grid: List[float] = Field(default_factory=lambda: list(C_TILDE_GRID_PADRAO))

    @field_validator("degree")
    @classmethod
    def validar_grau(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v not in (2, 3):
            raise ValueError("grau do polinômio deve ser 2 ou 3")
        return v

    @field_validator("lambda_grid")
    @classmethod
    def validar_lambdas(cls, v: List[float]) -> List[float]:
        if not v or any(not 0 <= lam <= 1 for lam in v):
            raise ValueError("grade de λ deve ser não vazia e contida em [0, 1]")
        return v

    def resolve(self, order: OrderSpec, scenario: ScenarioSpec) -> "Budget":
        """Preenche q_target, path_count e grau com os padrões do cenário."""
        return self.model_copy(update={
            "q_target": self.q_target or (100 if order.intervals <= 2 else 200),
            "path_count": self.path_count or (15_000 if scenario.geometric else 10_000),
            "degree": self.degree or (3 if scenario.geometric else 2),
        })


class UtilityEvaluation(BaseModel):
    """U = −(1−λ)E + λR para uma estratégia."""
    model_config = ConfigDict(frozen=True)

    value: float
    expected_cost_term: float
    risk_term: float
    strategy: ExecutionStrategy
    path_count: int = 0
    master_seed: int = 0
    degenerate_paths: int = 0

    @property
    def components(self) -> Tuple[float, float]:
        return self.expected_cost_term, self.risk_term


class SamplingResult(BaseModel):
    """Candidatos aceitos no simplex e estatísticas de aceitação."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    # coordenadas livres (n_1, …, n_{K−1}) de cada candidato
    points: np.ndarray
    total_shares: float
    raw_count: int
    accepted_count: int

    @property
    def acceptance(self) -> float:
        return self.accepted_count / self.raw_count if self.raw_count else 0.0

    @property
    def strategies(self) -> List[ExecutionStrategy]:
        return [strategy_from_free(y, self.total_shares) for y in self.points]


def strategy_from_free(y: np.ndarray, total_shares: float) -> ExecutionStrategy:
    """Completa (n_1, …, n_{K−1}) com n_K = N − Σ n_k."""
    y = np.asarray(y, dtype=float).ravel()
    ultimo = max(total_shares - float(y.sum()), 0.0)
    return ExecutionStrategy.from_array(np.append(y, ultimo), total_shares)


class OptDiagnostics(BaseModel):
    model_config = ConfigDict(frozen=True)

    candidate_count: int = 0
    accepted_count: int = 0
    gd_iterations: int = 0
    surface_rmse: Optional[float] = None
    surface_condition: Optional[float] = None
    surface_value: Optional[float] = None
    degenerate_paths: int = 0


class OptResult(BaseModel):
    """Estratégia ótima de um método e sua utilidade."""
    model_config = ConfigDict(frozen=True)

    strategy: ExecutionStrategy
    utility: float = Field(..., allow_inf_nan=False)
    method: Method
    expected_cost_term: float = 0.0
    risk_term: float = 0.0
    diagnostics: OptDiagnostics = Field(default_factory=OptDiagnostics)


class FrontierPoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    lam: float
    impact_term: float
    risk_term: float
    strategy: ExecutionStrategy


class MapCell(BaseModel):
    model_config = ConfigDict(frozen=True)

    lam: float
    c_tilde: float
    result: OptResult
