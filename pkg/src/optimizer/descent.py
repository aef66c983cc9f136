"""Gradiente descendente projetado sobre {y ≥ 0, Σy ≤ N}."""

import logging
from itertools import combinations
from typing import Callable, List, NamedTuple

import numpy as np

from src.core.models import ExecutionStrategy
from src.optimizer.models import strategy_from_free
from src.optimizer.surface import PolySurface

logger = logging.getLogger(__name__)

ARMIJO_C = 1e-4
PASSO_MINIMO = 1e-10
MAX_ITER = 10_000
MAX_INICIOS = 8


class DescentResult(NamedTuple):
    point: np.ndarray
    value: float
    iterations: int


def _projetar_simplex(y: np.ndarray, total: float) -> np.ndarray:
    """Projeção euclidiana em {y ≥ 0, Σy = total} (algoritmo por ordenação)."""
    u = np.sort(y)[::-1]
    acumulado = np.cumsum(u) - total
    indices = np.arange(1, y.size + 1)
    rho = np.flatnonzero(u - acumulado / indices > 0)[-1]
    theta = acumulado[rho] / (rho + 1)
    return np.maximum(y - theta, 0.0)


def project_feasible(y: np.ndarray, total_shares: float) -> np.ndarray:
    """Projeção em {y ≥ 0, Σy ≤ N}."""
    z = np.maximum(np.asarray(y, dtype=float), 0.0)
    if z.sum() <= total_shares:
        return z
    return _projetar_simplex(np.asarray(y, dtype=float), total_shares)


def start_points(dimension: int, total_shares: float) -> List[np.ndarray]:
    """Até 8 inícios determinísticos: centróide, pontos médios das arestas e vértices."""
    vertices = [np.zeros(dimension)] + [total_shares * np.eye(dimension)[i] for i in range(dimension)]
    candidatos = [np.mean(vertices, axis=0)]
    candidatos += [(a + b) / 2 for a, b in combinations(vertices, 2)]
    candidatos += vertices
    pontos: List[np.ndarray] = []
    for c in candidatos:
        if not any(np.allclose(c, p) for p in pontos):
            pontos.append(c)
        if len(pontos) == MAX_INICIOS:
            break
    return pontos


def projected_gradient_descent(f: Callable[[np.ndarray], float],
                               grad: Callable[[np.ndarray], np.ndarray],
                               y0: np.ndarray, total_shares: float,
                               max_iter: int = MAX_ITER) -> DescentResult:
    """Busca de Armijo com passo inicial N, reduzido à metade até aceitar."""
    y = project_feasible(y0, total_shares)
    fy = f(y)
    iteracao = 0
    for iteracao in range(1, max_iter + 1):
        g = grad(y)
        passo = total_shares
        aceito = False
        while passo > 1e-16:
            candidato = project_feasible(y - passo * g, total_shares)
            delta = candidato - y
            fc = f(candidato)
            if fc <= fy + ARMIJO_C * float(np.dot(g, delta)):
                aceito = True
                break
            passo /= 2
        if not aceito:
            break
        y, fy = candidato, fc
        if np.linalg.norm(delta) < PASSO_MINIMO:
            break
    return DescentResult(point=y, value=float(fy), iterations=iteracao)


def minimize_surface(surface: PolySurface, total_shares: float) -> ExecutionStrategy:
    """Mínimo da superfície no simplex, melhor entre vários inícios."""
    return strategy_from_free(minimize_surface_point(surface, total_shares).point, total_shares)


def minimize_surface_point(surface: PolySurface, total_shares: float) -> DescentResult:
    melhor = None
    for inicio in start_points(surface.dimension, total_shares):
        resultado = projected_gradient_descent(surface.evaluate, surface.gradient, inicio,
                                               total_shares)
        if melhor is None or resultado.value < melhor.value:
            melhor = resultado
    logger.debug("Mínimo da superfície: %s (valor %.6g, %d iterações)",
                 melhor.point.tolist(), melhor.value, melhor.iterations)
    return melhor


def central_gradient(f: Callable[[np.ndarray], float], y: np.ndarray, passo: float,
                     total_shares: float) -> np.ndarray:
    """Diferenças centrais; pontos fora do conjunto viável são projetados."""
    grad = np.zeros_like(y)
    for i in range(y.size):
        e = np.zeros_like(y)
        e[i] = passo
        mais = project_feasible(y + e, total_shares)
        menos = project_feasible(y - e, total_shares)
        distancia = mais[i] - menos[i]
        if distancia > 0:
            grad[i] = (f(mais) - f(menos)) / distancia
    return grad
