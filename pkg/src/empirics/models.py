"""Relatórios estatísticos sobre amostras de custo."""

from typing import Dict

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.stochastic.distributions import DistributionSpec


class MomentReport(BaseModel):
    """Média, desvio padrão (não viesado), assimetria e curtose (não excesso)."""
    model_config = ConfigDict(frozen=True)

    mean: float
    std: float = Field(..., ge=0)
    skewness: float
    kurtosis: float
    count: int = Field(..., ge=1)

    def as_rows(self) -> Dict[str, float]:
        return {
            "mean": self.mean, "std": self.std, "skewness": self.skewness,
            "kurtosis": self.kurtosis, "count": self.count,
        }


class FitResult(BaseModel):
    """Distribuição ajustada por máxima verossimilhança."""
    model_config = ConfigDict(frozen=True)

    dist: DistributionSpec
    log_likelihood: float
    converged: bool = True
    iterations: int = 0

    @property
    def std(self) -> float:
        return self.dist.std


class KsReport(BaseModel):
    """Teste de Kolmogorov-Smirnov de uma amostra, bilateral."""
    model_config = ConfigDict(frozen=True)

    statistic: float = Field(..., ge=0, le=1)
    p_value: float = Field(..., ge=0, le=1)
    rejected_at_1pct: bool
    count: int = 0

    @model_validator(mode="after")
    def coerente(self) -> "KsReport":
        if self.rejected_at_1pct != (self.p_value < 0.01):
            raise ValueError("rejected_at_1pct deve equivaler a p_value < 0.01")
        return self
