"""Distribuições de retornos: amostragem, densidade e função de distribuição."""

import logging
import math
from enum import Enum
from typing import Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy import stats

from src.core.models import ReturnsKind, ReturnsSpec
from src.stochastic.streams import SeededStream, substream

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]


class DistKind(str, Enum):
    GAUSSIAN = "gaussian"
    STUDENT_T = "student_t"


class DistributionSpec(BaseModel):
    """Gaussiana(μ, σ) ou t-Student(μ, σ, ν).

    Para a t-Student σ é o parâmetro de escala; o desvio padrão é
    σ·√(ν/(ν−2)).
    """
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    kind: DistKind = DistKind.GAUSSIAN
    mu: float = 0.0
    sigma: float = Field(1.0, gt=0)
    # contínuo: ajustes de máxima verossimilhança podem devolver ν não inteiro
    nu: Optional[float] = Field(None, gt=2)

    @model_validator(mode="after")
    def exigir_nu(self) -> "DistributionSpec":
        if self.kind is DistKind.STUDENT_T and self.nu is None:
            raise ValueError("t-Student exige ν")
        return self

    @classmethod
    def gaussian(cls, mu: float = 0.0, sigma: float = 1.0) -> "DistributionSpec":
        return cls(kind=DistKind.GAUSSIAN, mu=mu, sigma=sigma)

    @classmethod
    def student_t(cls, mu: float = 0.0, sigma: float = 1.0, nu: float = 5.0) -> "DistributionSpec":
        return cls(kind=DistKind.STUDENT_T, mu=mu, sigma=sigma, nu=nu)

    @classmethod
    def from_returns(cls, returns: ReturnsSpec) -> "DistributionSpec":
        """Distribuição do ruído χ de um cenário (centrada em zero)."""
        if returns.kind is ReturnsKind.STUDENT_T:
            return cls.student_t(0.0, returns.scale, float(returns.nu))
        return cls.gaussian(0.0, returns.scale)

    @property
    def std(self) -> float:
        """Desvio padrão populacional."""
        if self.kind is DistKind.STUDENT_T:
            return self.sigma * math.sqrt(self.nu / (self.nu - 2))
        return self.sigma

    def frozen(self):
        """Distribuição congelada do scipy.stats com a mesma parametrização."""
        if self.kind is DistKind.STUDENT_T:
            return stats.t(df=self.nu, loc=self.mu, scale=self.sigma)
        return stats.norm(loc=self.mu, scale=self.sigma)


def sample(dist: DistributionSpec, count: int, stream: SeededStream) -> np.ndarray:
    """Amostras i.i.d. de `dist` retiradas do fluxo `stream`."""
    if count < 1:
        raise ValueError(f"count deve ser ≥ 1 (recebido {count})")
    rng = stream.generator()
    z = rng.standard_normal(count)
    if dist.kind is DistKind.STUDENT_T:
        # razão normal / √(χ²/ν), exata
        w = rng.chisquare(dist.nu, count)
        z = z / np.sqrt(w / dist.nu)
    return dist.mu + dist.sigma * z


def pdf(dist: DistributionSpec, x: ArrayLike) -> ArrayLike:
    return dist.frozen().pdf(x)


def cdf(dist: DistributionSpec, x: ArrayLike) -> ArrayLike:
    return dist.frozen().cdf(x)


def noise_matrix(dist: DistributionSpec, intervals: int, path_count: int,
                 master_seed: int, family: Optional[int] = None) -> np.ndarray:
    """Matriz (caminhos × K) de ruídos χ; a linha i vem do subfluxo i."""
    if path_count < 1:
        raise ValueError(f"path_count deve ser ≥ 1 (recebido {path_count})")
    logger.debug("Gerando ruído %s: %d caminhos × %d intervalos (semente %d, família %s)",
                 dist.kind.value, path_count, intervals, master_seed, family)
    matriz = np.empty((path_count, intervals))
    for i in range(path_count):
        matriz[i] = sample(dist, intervals, substream(master_seed, i, family))
    return matriz
