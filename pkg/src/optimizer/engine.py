"""Orquestrador das otimizações de estratégia de execução."""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from src.core.cache import NoiseCache
from src.core.models import (
    Configuracao, ExecutionStrategy, MarketParams, OrderSpec, ScenarioSpec, UtilityKind,
    UtilitySpec,
)
from src.costs.formulas import ac_utility
from src.optimizer.descent import (
    central_gradient, minimize_surface_point, projected_gradient_descent, start_points,
)
from src.optimizer.models import (
    Budget, FrontierPoint, MapCell, Method, OptDiagnostics, OptResult, SamplingResult,
    strategy_from_free,
)
from src.optimizer.sampling import sample_strategies
from src.optimizer.surface import PolySurface, fit_poly_surface
from src.optimizer.utility import UtilityEvaluator, combine
from src.utils.formatters import formatar_estrategia

logger = logging.getLogger(__name__)

PASSO_GRADIENTE_ANALITICO = 1e-6


class OptimizationRun(BaseModel):
    """Candidatos, valores, superfície e resultados de uma execução."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    spec: UtilitySpec
    budget: Budget
    sampling: Optional[SamplingResult] = None
    values: Optional[np.ndarray] = None
    surface: Optional[PolySurface] = None
    results: Dict[Method, OptResult]

    def result(self, method: Method) -> OptResult:
        return self.results[Method(method)]


class ExecutionOptimizer:
    """
    Otimizador de estratégias de execução.

    Avalia candidatos quase-aleatórios com números aleatórios comuns,
    ajusta superfícies polinomiais e minimiza por gradiente projetado.
    """

    def __init__(self, config: Optional[Configuracao] = None,
                 cache: Optional[NoiseCache] = None):
        self.config = config or Configuracao()
        self.cache = cache if cache is not None else NoiseCache(self.config.noise_cache_items)

    # ------------------------------------------------------------------
    # Avaliação
    # ------------------------------------------------------------------

    def evaluator(self, spec: UtilitySpec, order: OrderSpec, scenario: ScenarioSpec,
                  budget: Budget) -> UtilityEvaluator:
        budget = budget.resolve(order, scenario)
        return UtilityEvaluator(spec, order, scenario, budget.path_count, budget.master_seed,
                                crn=budget.crn, workers=budget.workers, cache=self.cache)

    def _componentes(self, avaliador: UtilityEvaluator, sampling: SamplingResult):
        avaliacoes = avaliador.evaluate_many(sampling.strategies)
        esperado = np.array([a.expected_cost_term for a in avaliacoes])
        risco = np.array([a.risk_term for a in avaliacoes])
        degenerados = max((a.degenerate_paths for a in avaliacoes), default=0)
        return esperado, risco, degenerados

    def _resultado(self, method: Method, avaliador: UtilityEvaluator,
                   strategy: ExecutionStrategy, **diagnostico) -> OptResult:
        avaliacao = avaliador.evaluate(strategy)
        diagnostico.setdefault("degenerate_paths", avaliacao.degenerate_paths)
        logger.info("%s [%s λ=%.3g]: %s, U = %.6g", method.rotulo, avaliador.spec.kind.value,
                    avaliador.spec.lam, formatar_estrategia(strategy.shares), avaliacao.value)
        return OptResult(
            strategy=strategy, utility=avaliacao.value, method=method,
            expected_cost_term=avaliacao.expected_cost_term, risk_term=avaliacao.risk_term,
            diagnostics=OptDiagnostics(**diagnostico),
        )

    # ------------------------------------------------------------------
    # Métodos
    # ------------------------------------------------------------------

    def _gd_direto(self, avaliador: UtilityEvaluator, budget: Budget) -> OptResult:
        N = avaliador.order.total_shares
        d = avaliador.order.intervals - 1
        passo = 1e-3 * N

        def f(y: np.ndarray) -> float:
            return avaliador.value(strategy_from_free(y, N))

        def grad(y: np.ndarray) -> np.ndarray:
            return central_gradient(f, y, passo, N)

        centroide = start_points(d, N)[0]
        resultado = projected_gradient_descent(f, grad, centroide, N, max_iter=budget.gd_max_iter)
        return self._resultado(Method.GD, avaliador, strategy_from_free(resultado.point, N),
                               gd_iterations=resultado.iterations)

    def _unico_intervalo(self, spec: UtilitySpec, avaliador: UtilityEvaluator,
                         budget: Budget, methods: Sequence[Method]) -> OptimizationRun:
        estrategia = ExecutionStrategy.from_array([avaliador.order.total_shares],
                                                  avaliador.order.total_shares)
        resultados = {m: self._resultado(m, avaliador, estrategia) for m in methods}
        return OptimizationRun(spec=spec, budget=budget, results=resultados)

    def run(self, spec: UtilitySpec, order: OrderSpec, scenario: ScenarioSpec,
            budget: Optional[Budget] = None,
            methods: Optional[Sequence[Method]] = None) -> OptimizationRun:
        """Executa os métodos pedidos compartilhando candidatos e superfície."""
        budget = (budget or Budget()).resolve(order, scenario)
        methods = [Method(m) for m in (methods or budget.methods)]
        avaliador = self.evaluator(spec, order, scenario, budget)

        if order.intervals == 1:
            return self._unico_intervalo(spec, avaliador, budget, methods)

        N = order.total_shares
        sampling = values = surface = None
        degenerados = 0
        resultados: Dict[Method, OptResult] = {}

        if any(m is not Method.GD for m in methods):
            sampling = sample_strategies(order.intervals, budget.q_target, N, budget.max_raw)
            esperado, risco, degenerados = self._componentes(avaliador, sampling)
            values = combine(spec.lam, esperado, risco)
        base = {"candidate_count": sampling.raw_count if sampling else 0,
                "accepted_count": sampling.accepted_count if sampling else 0}

        if Method.FIT_MC in methods or Method.FIT_GD in methods:
            surface = fit_poly_surface(sampling.points, values, budget.degree,
                                       lower=[0.0] * (order.intervals - 1),
                                       upper=[N] * (order.intervals - 1))
            base.update(surface_rmse=surface.rmse, surface_condition=surface.condition)

        for method in methods:
            if method is Method.GD:
                resultados[method] = self._gd_direto(avaliador, budget)
            elif method is Method.MC:
                melhor = int(np.argmin(values))
                resultados[method] = self._resultado(
                    method, avaliador, strategy_from_free(sampling.points[melhor], N), **base)
            elif method is Method.FIT_MC:
                sondas = sample_strategies(order.intervals, 10 * budget.q_target, N,
                                           budget.max_raw).points
                superficie = np.atleast_1d(surface.evaluate(sondas))
                melhor = int(np.argmin(superficie))
                resultados[method] = self._resultado(
                    method, avaliador, strategy_from_free(sondas[melhor], N),
                    surface_value=float(superficie[melhor]), **base)
            else:
                minimo = minimize_surface_point(surface, N)
                resultados[method] = self._resultado(
                    method, avaliador, strategy_from_free(minimo.point, N),
                    gd_iterations=minimo.iterations, surface_value=minimo.value, **base)

        if degenerados:
            logger.warning("Até %d trajetórias degeneradas por candidato", degenerados)
        return OptimizationRun(spec=spec, budget=budget, sampling=sampling, values=values,
                               surface=surface, results=resultados)

    def optimize(self, method: Method, spec: UtilitySpec, order: OrderSpec,
                 scenario: ScenarioSpec, budget: Optional[Budget] = None) -> OptResult:
        """Estratégia ótima por um único método."""
        return self.run(spec, order, scenario, budget, methods=[Method(method)]).result(method)

    # ------------------------------------------------------------------
    # Fronteira eficiente e mapa de estratégias
    # ------------------------------------------------------------------

    def _otimos_por_lambda(self, spec: UtilitySpec, order: OrderSpec, scenario: ScenarioSpec,
                           budget: Budget, lambdas: Sequence[float]
                           ) -> List[Tuple[OptResult, Tuple[float, float]]]:
        """
        Fit + GD para cada λ reaproveitando (E, R) dos candidatos.

        Cada ótimo vem com (E, R) das superfícies ajustadas a cada termo,
        avaliadas no ponto ótimo.
        """
        budget = budget.resolve(order, scenario)
        if order.intervals == 1:
            otimos = [self.optimize(Method.FIT_GD, spec.model_copy(update={"lam": lam}), order,
                                    scenario, budget) for lam in lambdas]
            return [(r, (r.expected_cost_term, r.risk_term)) for r in otimos]

        N = order.total_shares
        d = order.intervals - 1
        avaliador = self.evaluator(spec, order, scenario, budget)
        sampling = sample_strategies(order.intervals, budget.q_target, N, budget.max_raw)
        esperado, risco, _ = self._componentes(avaliador, sampling)

        limites = {"lower": [0.0] * d, "upper": [N] * d}
        superficie_esperado = fit_poly_surface(sampling.points, esperado, budget.degree, **limites)
        superficie_risco = fit_poly_surface(sampling.points, risco, budget.degree, **limites)

        resultados = []
        for lam in lambdas:
            spec_lam = spec.model_copy(update={"lam": float(lam)})
            surface = fit_poly_surface(sampling.points, combine(lam, esperado, risco),
                                       budget.degree, **limites)
            minimo = minimize_surface_point(surface, N)
            resultado = self._resultado(
                Method.FIT_GD, avaliador.with_spec(spec_lam), strategy_from_free(minimo.point, N),
                candidate_count=sampling.raw_count, accepted_count=sampling.accepted_count,
                gd_iterations=minimo.iterations, surface_rmse=surface.rmse,
                surface_condition=surface.condition, surface_value=minimo.value,
            )
            # termos de risco são não negativos
            termos = (float(superficie_esperado.evaluate(minimo.point)),
                      max(float(superficie_risco.evaluate(minimo.point)), 0.0))
            resultados.append((resultado, termos))
        return resultados

    def efficient_frontier(self, kind: UtilityKind, order: OrderSpec, scenario: ScenarioSpec,
                           lambda_grid: Optional[Sequence[float]] = None,
                           budget: Optional[Budget] = None,
                           c_tilde: float = -1.0) -> List[FrontierPoint]:
        """
        (−E[c], termo de risco, estratégia) do ótimo para cada λ.

        Os termos vêm das superfícies ajustadas a E e a R, avaliadas no ótimo.
        """
        budget = budget or Budget()
        lambdas = list(lambda_grid if lambda_grid is not None else budget.lambda_grid)
        spec = UtilitySpec(kind=kind, lam=lambdas[0], c_tilde=c_tilde)
        otimos = self._otimos_por_lambda(spec, order, scenario, budget, lambdas)
        return [
            FrontierPoint(lam=lam, impact_term=-esperado, risk_term=risco, strategy=r.strategy)
            for lam, (r, (esperado, risco)) in zip(lambdas, otimos)
        ]

    def strategy_map(self, order: OrderSpec, scenario: ScenarioSpec,
                     lambda_grid: Optional[Sequence[float]] = None,
                     c_tilde_grid: Optional[Sequence[float]] = None,
                     budget: Optional[Budget] = None,
                     kind: UtilityKind = UtilityKind.DM) -> List[MapCell]:
        """Grade λ × c̃ de ótimos Fit + GD."""
        budget = budget or Budget()
        lambdas = list(lambda_grid if lambda_grid is not None else budget.lambda_grid)
        limiares = list(c_tilde_grid if c_tilde_grid is not None else budget.c_tilde_grid)
        celulas: Dict[tuple, MapCell] = {}
        for c_tilde in limiares:
            spec = UtilitySpec(kind=kind, lam=lambdas[0], c_tilde=c_tilde)
            otimos = self._otimos_por_lambda(spec, order, scenario, budget, lambdas)
            for lam, (r, _) in zip(lambdas, otimos):
                celulas[(lam, c_tilde)] = MapCell(lam=lam, c_tilde=c_tilde, result=r)
        return [celulas[(lam, c)] for lam in lambdas for c in limiares]


def ac_analytic_optimum(order: OrderSpec, params: MarketParams, lam: float,
                        max_iter: int = 10_000) -> ExecutionStrategy:
    """Ótimo média-variância exato do modelo AC, para qualquer K.

    A utilidade é convexa quando η/Δt > γ/2, então basta partir do TWAP.
    """
    N = order.total_shares
    if order.intervals == 1:
        return ExecutionStrategy.from_array([N], N)
    d = order.intervals - 1

    def f(y: np.ndarray) -> float:
        return ac_utility(order, strategy_from_free(y, N), params, lam)

    def grad(y: np.ndarray) -> np.ndarray:
        return central_gradient(f, y, PASSO_GRADIENTE_ANALITICO * N, N)

    resultado = projected_gradient_descent(f, grad, start_points(d, N)[0], N, max_iter=max_iter)
    logger.info("Ótimo AC analítico (K=%d, λ=%.3g): U = %.6g em %d iterações",
                order.intervals, lam, resultado.value, resultado.iterations)
    return strategy_from_free(resultado.point, N)
