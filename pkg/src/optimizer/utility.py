"""Avaliação de funções utilidade sobre estratégias de execução."""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.core.cache import NoiseCache
from src.core.errors import DomainError
from src.core.models import ExecutionStrategy, OrderSpec, ScenarioSpec, UtilityKind, UtilitySpec
from src.core.strategy import require_valid
from src.costs.formulas import expected_cost_ac, variance_ac
from src.costs.simulation import costs_from_noise, scenario_noise
from src.empirics.statistics import body_probability, tail_probability, two_tail_probability
from src.optimizer.models import UtilityEvaluation

logger = logging.getLogger(__name__)


def combine(lam: float, expected: float, risk: float) -> float:
    """U = −(1−λ)E + λR."""
    return -(1.0 - lam) * expected + lam * risk


def check_compatible(spec: UtilitySpec, scenario: ScenarioSpec) -> None:
    if spec.kind is UtilityKind.AC_ANALYTIC and scenario.geometric:
        raise DomainError(
            "Utilidade AC analítica exige dinâmica aritmética de Almgren-Chriss",
            details={"dynamics": scenario.dynamics.value},
        )


def components_from_costs(spec: UtilitySpec, custos: np.ndarray) -> Tuple[float, float]:
    """(E, R) empíricos de um vetor de custos."""
    esperado = float(np.mean(custos))
    if spec.kind is UtilityKind.AC_NUMERIC:
        risco = float(np.var(custos, ddof=1)) if custos.size > 1 else 0.0
    elif spec.kind is UtilityKind.DM:
        risco = tail_probability(custos, spec.c_tilde)
    elif spec.kind is UtilityKind.TWO_TAIL:
        # λ/2 em cada cauda
        risco = 0.5 * two_tail_probability(custos, spec.c_tilde)
    elif spec.kind is UtilityKind.BODY:
        risco = body_probability(custos, spec.c_tilde)
    else:
        raise DomainError(f"Utilidade {spec.kind.value} não é amostral")
    return esperado, risco


def evaluate_utility(spec: UtilitySpec, order: OrderSpec, strategy: ExecutionStrategy,
                     scenario: ScenarioSpec, path_count: int, master_seed: int,
                     noise: Optional[np.ndarray] = None) -> UtilityEvaluation:
    """Avalia U para uma estratégia; `noise` permite reutilizar a mesma matriz."""
    check_compatible(spec, scenario)
    require_valid(order, strategy, scenario)

    degenerados = 0
    if spec.kind is UtilityKind.AC_ANALYTIC:
        esperado = expected_cost_ac(order, strategy, scenario.params)
        risco = variance_ac(order, strategy, scenario.params)
    else:
        if noise is None:
            noise = scenario_noise(order, scenario, path_count, master_seed)
        custos, degenerados = costs_from_noise(order, strategy.as_array(), scenario, noise)
        esperado, risco = components_from_costs(spec, np.asarray(custos))

    return UtilityEvaluation(
        value=combine(spec.lam, esperado, risco), expected_cost_term=esperado,
        risk_term=risco, strategy=strategy, path_count=path_count,
        master_seed=master_seed, degenerate_paths=degenerados,
    )


class UtilityEvaluator:
    """Avalia muitas estratégias com o mesmo ruído (números aleatórios comuns).

    Sem CRN, a avaliação de índice j usa a família de subfluxos j + 1.
    """

    def __init__(self, spec: UtilitySpec, order: OrderSpec, scenario: ScenarioSpec,
                 path_count: int, master_seed: int, crn: bool = True, workers: int = 1,
                 cache: Optional[NoiseCache] = None):
        check_compatible(spec, scenario)
        self.spec = spec
        self.order = order
        self.scenario = scenario
        self.path_count = path_count
        self.master_seed = master_seed
        self.crn = crn
        self.workers = workers
        self.cache = cache if cache is not None else NoiseCache()
        self._proxima_familia = 1

    @property
    def analytic(self) -> bool:
        return self.spec.kind is UtilityKind.AC_ANALYTIC

    def with_spec(self, spec: UtilitySpec) -> "UtilityEvaluator":
        """Mesmo ruído e orçamento, outra utilidade."""
        return UtilityEvaluator(spec, self.order, self.scenario, self.path_count,
                                self.master_seed, self.crn, self.workers, self.cache)

    def _ruido(self, familia: Optional[int]) -> Optional[np.ndarray]:
        if self.analytic:
            return None
        if self.crn:
            return scenario_noise(self.order, self.scenario, self.path_count,
                                  self.master_seed, cache=self.cache)
        return scenario_noise(self.order, self.scenario, self.path_count,
                              self.master_seed, family=familia)

    def _avaliar(self, strategy: ExecutionStrategy, noise: Optional[np.ndarray]) -> UtilityEvaluation:
        return evaluate_utility(self.spec, self.order, strategy, self.scenario,
                                self.path_count, self.master_seed, noise=noise)

    def evaluate(self, strategy: ExecutionStrategy) -> UtilityEvaluation:
        familia = None
        if not self.crn:
            familia = self._proxima_familia
            self._proxima_familia += 1
        return self._avaliar(strategy, self._ruido(familia))

    def evaluate_many(self, strategies: Sequence[ExecutionStrategy]) -> List[UtilityEvaluation]:
        """Avaliações na ordem de entrada, independentemente do número de workers."""
        logger.debug("Avaliando %d candidatos (%s, CRN=%s, workers=%d)", len(strategies),
                     self.spec.kind.value, self.crn, self.workers)
        if self.crn:
            compartilhado = self._ruido(None)
            ruidos = [compartilhado] * len(strategies)
        else:
            base = self._proxima_familia
            self._proxima_familia += len(strategies)
            ruidos = (self._ruido(base + j) for j in range(len(strategies)))

        if self.workers <= 1 or len(strategies) < 2:
            return [self._avaliar(s, r) for s, r in zip(strategies, ruidos)]
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            return list(pool.map(self._avaliar, strategies, ruidos))

    def value(self, strategy: ExecutionStrategy) -> float:
        return self.evaluate(strategy).value
