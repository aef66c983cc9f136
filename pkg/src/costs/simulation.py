"""Amostras Monte Carlo de custos de transação."""

import logging
from typing import Optional

import numpy as np

from src.core.cache import NoiseCache
from src.core.models import ExecutionStrategy, OrderSpec, ScenarioSpec
from src.costs.formulas import cost_ac_matrix, cost_geometric_matrix
from src.costs.models import CostSample
from src.stochastic.distributions import DistributionSpec, noise_matrix

logger = logging.getLogger(__name__)


def scenario_noise(order: OrderSpec, scenario: ScenarioSpec, path_count: int,
                   master_seed: int, family: Optional[int] = None,
                   cache: Optional[NoiseCache] = None) -> np.ndarray:
    """Matriz de ruído do cenário; a linha i vem de substream(master_seed, i)."""
    dist = DistributionSpec.from_returns(scenario.returns)

    def gerar() -> np.ndarray:
        return noise_matrix(dist, order.intervals, path_count, master_seed, family)

    if cache is None:
        return gerar()
    return cache.get_or_create(gerar, dist.model_dump(), order.intervals, path_count,
                               master_seed, family)


def costs_from_noise(order: OrderSpec, shares: np.ndarray, scenario: ScenarioSpec,
                     noise: np.ndarray):
    """Vetor de custos por caminho e contagem de caminhos degenerados."""
    if scenario.geometric:
        return cost_geometric_matrix(order, shares, scenario, noise)
    return cost_ac_matrix(order, shares, scenario.params, noise), 0


def simulate_cost_sample(order: OrderSpec, strategy: ExecutionStrategy, scenario: ScenarioSpec,
                         path_count: int, master_seed: int,
                         noise: Optional[np.ndarray] = None) -> CostSample:
    """Simula `path_count` trajetórias e devolve o custo por ação de cada uma."""
    if noise is None:
        noise = scenario_noise(order, scenario, path_count, master_seed)
    custos, degenerados = costs_from_noise(order, strategy.as_array(), scenario, noise)
    if degenerados:
        logger.warning("%d de %d trajetórias geométricas cruzaram zero (mantidas na amostra)",
                       degenerados, path_count)
    return CostSample(costs=np.asarray(custos, dtype=float), path_count=path_count,
                      master_seed=master_seed, scenario_fingerprint=scenario.fingerprint(),
                      degenerate_paths=degenerados)
