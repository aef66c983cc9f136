"""Superfícies polinomiais de resposta ajustadas por mínimos quadrados."""

import logging
from itertools import combinations_with_replacement
from math import comb
from typing import Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from src.core.errors import FitError

logger = logging.getLogger(__name__)

RIDGE = 1e-8
CONDICAO_MAXIMA = 1e12


def monomial_exponents(dimension: int, degree: int) -> Tuple[Tuple[int, ...], ...]:
    """Expoentes de todos os monômios de grau total ≤ degree, em ordem de grau."""
    expoentes = []
    for grau in range(degree + 1):
        for combinacao in combinations_with_replacement(range(dimension), grau):
            e = [0] * dimension
            for i in combinacao:
                e[i] += 1
            expoentes.append(tuple(e))
    return tuple(expoentes)


def _design(u: np.ndarray, expoentes: np.ndarray) -> np.ndarray:
    return np.prod(u[:, None, :] ** expoentes[None, :, :], axis=2)


class PolySurface(BaseModel):
    """Polinômio em coordenadas normalizadas u = (y − lower)/(upper − lower)."""
    model_config = ConfigDict(frozen=True)

    dimension: int
    degree: int
    exponents: Tuple[Tuple[int, ...], ...]
    coefficients: Tuple[float, ...]
    lower: Tuple[float, ...]
    upper: Tuple[float, ...]
    rmse: float = 0.0
    condition: float = 1.0
    ridge: bool = False

    @model_validator(mode="after")
    def conferir(self) -> "PolySurface":
        if self.degree not in (2, 3):
            raise ValueError("grau deve ser 2 ou 3")
        esperado = comb(self.dimension + self.degree, self.degree)
        if len(self.coefficients) != esperado or len(self.exponents) != esperado:
            raise ValueError(f"esperados {esperado} coeficientes")
        if len(self.lower) != self.dimension or len(self.upper) != self.dimension:
            raise ValueError("limites de normalização com dimensão errada")
        return self

    @classmethod
    def from_coefficients(cls, coefficients: Sequence[float], dimension: int, degree: int,
                          lower: Optional[Sequence[float]] = None,
                          upper: Optional[Sequence[float]] = None) -> "PolySurface":
        return cls(
            dimension=dimension, degree=degree,
            exponents=monomial_exponents(dimension, degree),
            coefficients=tuple(float(c) for c in coefficients),
            lower=tuple(lower if lower is not None else [0.0] * dimension),
            upper=tuple(upper if upper is not None else [1.0] * dimension),
        )

    def _escala(self) -> np.ndarray:
        return np.asarray(self.upper) - np.asarray(self.lower)

    def _matriz(self, y) -> np.ndarray:
        y = np.asarray(y, dtype=float)
        if y.ndim == 2:
            return y
        if self.dimension == 1:
            return y.reshape(-1, 1)
        return y.reshape(1, -1)

    def normalize(self, y: np.ndarray) -> np.ndarray:
        return (self._matriz(y) - np.asarray(self.lower)) / self._escala()

    def evaluate(self, y: np.ndarray):
        """Valores em cada linha de `y`; escalar para um único ponto."""
        unico = np.ndim(y) == 0 or (np.ndim(y) == 1 and np.size(y) == self.dimension)
        valores = _design(self.normalize(y), np.asarray(self.exponents)) @ np.asarray(self.coefficients)
        return float(valores[0]) if unico else valores

    def gradient(self, y: np.ndarray) -> np.ndarray:
        """Gradiente analítico em relação a y."""
        u = self.normalize(y)[0]
        expoentes = np.asarray(self.exponents)
        coef = np.asarray(self.coefficients)
        grad = np.zeros(self.dimension)
        for j in range(self.dimension):
            e = expoentes.copy()
            fator = e[:, j].astype(float)
            e[:, j] = np.maximum(e[:, j] - 1, 0)
            grad[j] = np.sum(coef * fator * np.prod(u ** e, axis=1))
        return grad / self._escala()


def fit_poly_surface(candidates: np.ndarray, values: np.ndarray, degree: int,
                     lower: Optional[Sequence[float]] = None,
                     upper: Optional[Sequence[float]] = None) -> PolySurface:
    """Ajuste por mínimos quadrados com regularização ridge se mal condicionado."""
    Y = np.atleast_2d(np.asarray(candidates, dtype=float))
    if Y.shape[0] == 1 and np.ndim(candidates) == 1:
        Y = Y.T
    z = np.asarray(values, dtype=float).ravel()
    d = Y.shape[1]
    expoentes = monomial_exponents(d, degree)
    if Y.shape[0] < 2 * len(expoentes):
        raise FitError(
            f"ajuste subdeterminado: {Y.shape[0]} pontos para {len(expoentes)} coeficientes",
            details={"exigido": 2 * len(expoentes)},
        )
    if z.size != Y.shape[0]:
        raise FitError("número de valores difere do número de candidatos")

    lower = np.asarray(lower if lower is not None else Y.min(axis=0), dtype=float)
    upper = np.asarray(upper if upper is not None else Y.max(axis=0), dtype=float)
    upper = np.where(upper - lower > 0, upper, lower + 1.0)

    X = _design((Y - lower) / (upper - lower), np.asarray(expoentes))
    normal = X.T @ X
    condicao = float(np.linalg.cond(normal))
    ridge = not np.isfinite(condicao) or condicao > CONDICAO_MAXIMA
    if ridge:
        logger.debug("Sistema normal mal condicionado (%.3g); usando ridge %.0e", condicao, RIDGE)
        coef = np.linalg.solve(normal + RIDGE * np.eye(len(expoentes)), X.T @ z)
    else:
        coef, *_ = np.linalg.lstsq(X, z, rcond=None)

    rmse = float(np.sqrt(np.mean((X @ coef - z) ** 2)))
    logger.debug("Superfície grau %d em %d dimensões: RMSE %.3g", degree, d, rmse)
    return PolySurface(
        dimension=d, degree=degree, exponents=expoentes,
        coefficients=tuple(coef.tolist()), lower=tuple(lower.tolist()),
        upper=tuple(upper.tolist()), rmse=rmse, condition=condicao, ridge=ridge,
    )
