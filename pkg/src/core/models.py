"""Modelos de dados com Pydantic."""

import hashlib
import math
import os
from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.core.errors import StrategyValidationError


class Side(str, Enum):
    """Lado da ordem."""

    BUY = "buy"
    SELL = "sell"

    @property
    def xi(self) -> int:
        """Sinal ξ: -1 para compra, +1 para venda."""
        return -1 if self is Side.BUY else 1


class OrderSpec(BaseModel):
    """Ordem a ser agendada: lado, tamanho, horizonte e subdivisão."""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    side: Side = Side.SELL
    total_shares: float = Field(1.0, gt=0)
    horizon: float = Field(1.0, gt=0)
    intervals: int = Field(1, ge=1)
    dt: float = Field(1.0, gt=0)

    @model_validator(mode="before")
    @classmethod
    def completar_dt(cls, data):
        # dt ausente é derivado de T/K
        if isinstance(data, dict) and data.get("dt") is None:
            data = dict(data)
            horizon = data.get("horizon", 1.0)
            intervals = data.get("intervals", 1)
            try:
                data["dt"] = float(horizon) / int(intervals)
            except (TypeError, ValueError, ZeroDivisionError):
                data.pop("dt", None)
        return data

    @model_validator(mode="after")
    def verificar_grade(self) -> "OrderSpec":
        if not math.isclose(self.intervals * self.dt, self.horizon, rel_tol=1e-12):
            raise ValueError(
                f"K·Δt = {self.intervals * self.dt} difere do horizonte T = {self.horizon}"
            )
        return self

    @property
    def xi(self) -> int:
        return self.side.xi

    @classmethod
    def uniforme(cls, intervals: int, total_shares: float = 1.0, side: Side = Side.SELL,
                 dt: float = 1.0) -> "OrderSpec":
        """Ordem com K intervalos de comprimento dt (horizonte K·dt)."""
        return cls(side=side, total_shares=total_shares, horizon=intervals * dt,
                   intervals=intervals, dt=dt)


class MarketParams(BaseModel):
    """Parâmetros de mercado e de impacto."""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    p0: float = Field(1.0, gt=0)
    sigma: float = Field(1.0, ge=0)
    gamma: float = 1.0
    eta: float = 1.0
    epsilon: float = Field(0.0, ge=0)
    rho: float = Field(0.5, ge=0)
    # expoente do impacto temporário: h(x) = ξ(ε + η x^α)
    temp_exponent: float = Field(1.0, gt=0)


class ExecutionStrategy(BaseModel):
    """Vetor de ações executadas por intervalo, {n_k}.

    A construção não impõe Σn_k = N: estratégias inválidas precisam
    existir para serem reportadas por `validate`.
    """
    model_config = ConfigDict(frozen=True)

    shares: Tuple[float, ...]
    total_shares: float = 1.0

    @classmethod
    def from_array(cls, shares, total_shares: float = 1.0) -> "ExecutionStrategy":
        return cls(shares=tuple(float(v) for v in np.asarray(shares, dtype=float).ravel()),
                   total_shares=float(total_shares))

    @property
    def intervals(self) -> int:
        return len(self.shares)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.shares, dtype=float)

    def violations(self) -> List[str]:
        """Lista legível de invariantes violados."""
        erros: List[str] = []
        n = self.as_array()
        N = self.total_shares
        if not np.isfinite(N) or N <= 0:
            erros.append(f"N deve ser positivo e finito (recebido {N})")
            return erros
        if n.size == 0:
            erros.append("estratégia vazia")
            return erros
        if not np.all(np.isfinite(n)):
            erros.append("alocação com NaN/Inf")
            return erros
        if np.any(n < 0):
            erros.append(f"negative allocation: {n[n < 0].tolist()}")
        soma = float(n.sum())
        if abs(soma - N) > 1e-9 * N:
            if soma > N:
                erros.append(f"sum exceeds N: Σn_k = {soma:.12g} > N = {N:.12g}")
            else:
                erros.append(f"sum below N: Σn_k = {soma:.12g} < N = {N:.12g}")
        return erros

    def check(self) -> "ExecutionStrategy":
        """Levanta StrategyValidationError se houver violações."""
        erros = self.violations()
        if erros:
            raise StrategyValidationError(erros, details={"shares": list(self.shares)})
        return self


class UtilityKind(str, Enum):
    """Famílias de função utilidade."""

    AC_ANALYTIC = "ac_analytic"
    AC_NUMERIC = "ac_numeric"
    DM = "dm"
    TWO_TAIL = "two_tail"
    BODY = "body"


class UtilitySpec(BaseModel):
    """Tipo de utilidade, aversão ao risco λ e limiar c̃."""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False, populate_by_name=True)

    kind: UtilityKind = UtilityKind.DM
    lam: float = Field(0.3, ge=0, le=1, alias="lambda")
    c_tilde: float = -1.0

    @property
    def usa_amostra(self) -> bool:
        return self.kind is not UtilityKind.AC_ANALYTIC


class Dynamics(str, Enum):
    ARITHMETIC_AC = "arithmetic_ac"
    GEOMETRIC_PROPAGATOR = "geometric_propagator"


class ImpactKind(str, Enum):
    AC_LINEAR = "ac_linear"
    LIN_EXP = "lin_exp"
    LIN_POW = "lin_pow"
    SQRT = "sqrt"


class ReturnsKind(str, Enum):
    GAUSSIAN = "gaussian"
    STUDENT_T = "student_t"


class ReturnsSpec(BaseModel):
    """Distribuição do ruído χ dos retornos."""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    kind: ReturnsKind = ReturnsKind.GAUSSIAN
    nu: Optional[int] = Field(None, ge=3)
    scale: float = Field(1.0, gt=0)

    @model_validator(mode="after")
    def exigir_nu(self) -> "ReturnsSpec":
        if self.kind is ReturnsKind.STUDENT_T and self.nu is None:
            raise ValueError("retornos t-Student exigem ν ≥ 3")
        return self

    @classmethod
    def student_unit_variance(cls, nu: int = 5) -> "ReturnsSpec":
        """t-Student com desvio padrão 1: escala σ = √((ν−2)/ν)."""
        return cls(kind=ReturnsKind.STUDENT_T, nu=nu, scale=math.sqrt((nu - 2) / nu))


_PARES_VALIDOS = {
    Dynamics.ARITHMETIC_AC: {ImpactKind.AC_LINEAR},
    Dynamics.GEOMETRIC_PROPAGATOR: {ImpactKind.LIN_EXP, ImpactKind.LIN_POW, ImpactKind.SQRT},
}


class ScenarioSpec(BaseModel):
    """Dinâmica de preço, modelo de impacto, retornos e parâmetros de mercado."""
    model_config = ConfigDict(frozen=True)

    name: str = "custom"
    dynamics: Dynamics = Dynamics.ARITHMETIC_AC
    impact: ImpactKind = ImpactKind.AC_LINEAR
    returns: ReturnsSpec = Field(default_factory=ReturnsSpec)
    params: MarketParams = Field(default_factory=MarketParams)

    @model_validator(mode="after")
    def verificar_par(self) -> "ScenarioSpec":
        erros = self.violations()
        if erros:
            raise ValueError("; ".join(erros))
        return self

    def violations(self) -> List[str]:
        erros = []
        if self.impact not in _PARES_VALIDOS[self.dynamics]:
            erros.append(
                f"impacto {self.impact.value} incompatível com dinâmica {self.dynamics.value}"
            )
        if self.returns.kind is ReturnsKind.STUDENT_T and (self.returns.nu or 0) < 3:
            erros.append("retornos t-Student exigem ν ≥ 3")
        return erros

    @property
    def geometric(self) -> bool:
        return self.dynamics is Dynamics.GEOMETRIC_PROPAGATOR

    def with_params(self, **alteracoes) -> "ScenarioSpec":
        """Cópia com parâmetros de mercado alterados."""
        return self.model_copy(update={"params": self.params.model_copy(update=alteracoes)})

    def fingerprint(self) -> str:
        """Impressão digital estável do cenário (proveniência das amostras)."""
        dados = self.model_dump_json(exclude={"name"})
        return hashlib.md5(dados.encode()).hexdigest()[:12]


class RunRecord(BaseModel):
    """Registro de uma execução da linha de comando."""
    model_config = ConfigDict(from_attributes=True)

    id: Optional[int] = None
    comando: str
    master_seed: int
    path_count: Optional[int] = None
    cenario: str = ""
    fingerprint: str = ""
    output_dir: str = ""
    resumo: Dict[str, Any] = Field(default_factory=dict)
    timestamp: datetime = Field(default_factory=datetime.now)


class Configuracao(BaseModel):
    """Configurações do processo."""
    model_config = ConfigDict(from_attributes=True)

    log_level: str = "INFO"
    log_file: str = "logs/tca.log"
    database_url: str = "sqlite:///data/tca.db"
    default_seed: int = Field(42, ge=0)
    workers: int = Field(1, ge=1)
    noise_cache_items: int = Field(8, ge=0)

    @field_validator("log_level")
    @classmethod
    def validar_nivel(cls, v: str) -> str:
        v = v.upper()
        if v not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"nível de log inválido: {v}")
        return v

    @classmethod
    def from_env(cls, env_file: Optional[str] = None) -> "Configuracao":
        """Lê `.env` e variáveis de ambiente."""
        load_dotenv(env_file)
        valores = {
            "log_level": os.getenv("LOG_LEVEL"),
            "log_file": os.getenv("LOG_FILE"),
            "database_url": os.getenv("DATABASE_URL"),
            "default_seed": os.getenv("TCA_SEED"),
            "workers": os.getenv("TCA_WORKERS"),
            "noise_cache_items": os.getenv("TCA_NOISE_CACHE"),
        }
        return cls(**{k: v for k, v in valores.items() if v is not None})
