"""Modelos de dados de custos: amostras simuladas, fita de mercado e execuções."""

from enum import Enum
from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.core.errors import StrategyValidationError


class CostSample(BaseModel):
    """Custos por ação simulados, com proveniência."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    costs: np.ndarray
    path_count: int = Field(..., ge=1)
    master_seed: int = Field(..., ge=0)
    scenario_fingerprint: str = ""
    degenerate_paths: int = Field(0, ge=0)

    @field_validator("costs")
    @classmethod
    def validar_custos(cls, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=float)
        if v.ndim != 1:
            raise ValueError("custos devem formar um vetor")
        if not np.all(np.isfinite(v)):
            raise ValueError("custos com NaN/Inf")
        v.setflags(write=False)
        return v

    @model_validator(mode="after")
    def conferir_tamanho(self) -> "CostSample":
        if self.costs.size != self.path_count:
            raise ValueError(f"{self.costs.size} custos para path_count = {self.path_count}")
        return self

    def __len__(self) -> int:
        return self.path_count


class BenchmarkKind(str, Enum):
    TWAP = "twap"
    VWAP = "vwap"
    PWP = "pwp"
    MO = "mo"
    MC = "mc"
    IS = "is"


class MarketTape(BaseModel):
    """Barras de mercado (k, p_k, ν_k) e preços de abertura, fechamento e início."""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    k: Tuple[int, ...]
    prices: Tuple[float, ...]
    volumes: Tuple[float, ...]
    open_price: Optional[float] = None
    close_price: Optional[float] = None
    start_price: Optional[float] = None

    @model_validator(mode="after")
    def validar_barras(self) -> "MarketTape":
        if not self.prices:
            raise ValueError("a fita precisa de ao menos uma barra")
        if not (len(self.k) == len(self.prices) == len(self.volumes)):
            raise ValueError("colunas k, price e volume com tamanhos diferentes")
        if any(v < 0 for v in self.volumes):
            raise ValueError("volumes devem ser ≥ 0")
        return self

    @property
    def p_open(self) -> float:
        return self.open_price if self.open_price is not None else self.prices[0]

    @property
    def p_close(self) -> float:
        return self.close_price if self.close_price is not None else self.prices[-1]

    @property
    def p_start(self) -> float:
        return self.start_price if self.start_price is not None else self.prices[0]

    @property
    def total_volume(self) -> float:
        return float(sum(self.volumes))

    def price_array(self) -> np.ndarray:
        return np.asarray(self.prices, dtype=float)

    def volume_array(self) -> np.ndarray:
        return np.asarray(self.volumes, dtype=float)


class FillSequence(BaseModel):
    """Execuções (k, n_k^exe, p_k^exe)."""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    k: Tuple[int, ...]
    shares: Tuple[float, ...]
    prices: Tuple[float, ...]

    @model_validator(mode="after")
    def validar_colunas(self) -> "FillSequence":
        if not (len(self.k) == len(self.shares) == len(self.prices)):
            raise ValueError("colunas k, shares e price com tamanhos diferentes")
        if not self.shares:
            raise ValueError("nenhuma execução")
        return self

    @classmethod
    def from_arrays(cls, shares, prices, k=None) -> "FillSequence":
        shares = np.asarray(shares, dtype=float).ravel()
        prices = np.asarray(prices, dtype=float).ravel()
        if k is None:
            k = np.arange(1, shares.size + 1)
        return cls(k=tuple(int(i) for i in k), shares=tuple(shares.tolist()),
                   prices=tuple(prices.tolist()))

    @property
    def total_shares(self) -> float:
        return float(sum(self.shares))

    def notional(self) -> float:
        """Σ n_k p_k."""
        return float(np.dot(self.shares, self.prices))

    def check(self, total_shares: float) -> "FillSequence":
        """Confere Σ n_k^exe = N (tolerância relativa 1e-9)."""
        soma = self.total_shares
        if abs(soma - total_shares) > 1e-9 * abs(total_shares):
            raise StrategyValidationError(
                [f"Σn_k^exe = {soma:.12g} difere de N = {total_shares:.12g}"],
                details={"shares": list(self.shares)},
            )
        return self
