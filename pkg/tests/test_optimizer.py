"""Testes para utilidades, amostragem, superfícies e o otimizador de execução."""

import unittest
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError
from scipy import stats

from src.core.errors import DomainError, FitError, SamplingLimitError
from src.core.models import (
    ExecutionStrategy, ImpactKind, MarketParams, OrderSpec, ReturnsSpec, UtilityKind, UtilitySpec,
)
from src.core.scenarios import get_scenario
from src.core.strategy import twap_strategy
from src.optimizer import (
    Budget, ExecutionOptimizer, Method, PolySurface, UtilityEvaluator, ac_analytic_optimum,
    evaluate_utility, fit_poly_surface, minimize_surface, monomial_exponents, project_feasible,
    sample_strategies,
)
from src.optimizer.descent import minimize_surface_point, start_points
from src.optimizer.utility import combine, components_from_costs


def ac(lam: float) -> UtilitySpec:
    return UtilitySpec(kind=UtilityKind.AC_ANALYTIC, lam=lam)


def dm(lam: float, c_tilde: float) -> UtilitySpec:
    return UtilitySpec(kind=UtilityKind.DM, lam=lam, c_tilde=c_tilde)


class TestEvaluateUtility(unittest.TestCase):
    """Testes para evaluate_utility."""

    def setUp(self):
        self.order = OrderSpec.uniforme(2)
        self.cenario = get_scenario("scenario1")

    def test_ac_analitica(self):
        avaliacao = evaluate_utility(ac(0.3), self.order, ExecutionStrategy.from_array([0.65, 0.35]),
                                     self.cenario, path_count=1, master_seed=42)
        self.assertAlmostEqual(avaliacao.value, 0.5775, places=12)
        self.assertAlmostEqual(avaliacao.expected_cost_term, -0.7725, places=12)
        self.assertAlmostEqual(avaliacao.risk_term, 0.1225, places=12)

    def test_lambda_zero(self):
        """λ = 0 reduz a utilidade a −E."""
        for spec in (ac(0.0), dm(0.0, -1.0), UtilitySpec(kind=UtilityKind.BODY, lam=0.0)):
            with self.subTest(kind=spec.kind):
                avaliacao = evaluate_utility(spec, self.order, twap_strategy(self.order),
                                             self.cenario, path_count=500, master_seed=3)
                self.assertEqual(avaliacao.value, -avaliacao.expected_cost_term)

    def test_dm_deterministico(self):
        """Com σ = 0 o custo é determinístico e a cauda vale 0 ou 1."""
        cenario = self.cenario.with_params(sigma=0.0)
        twap = twap_strategy(self.order)
        abaixo = evaluate_utility(dm(0.3, -1.0), self.order, twap, cenario, 200, 1)
        acima = evaluate_utility(dm(0.3, -0.5), self.order, twap, cenario, 200, 1)
        self.assertEqual(abaixo.risk_term, 0.0)
        self.assertEqual(acima.risk_term, 1.0)
        self.assertAlmostEqual(abaixo.expected_cost_term, -0.75, places=12)
        self.assertAlmostEqual(acima.value, 0.7 * 0.75 + 0.3, places=12)

    def test_identidade_do_valor(self):
        avaliacao = evaluate_utility(dm(0.4, -0.8), self.order,
                                     ExecutionStrategy.from_array([0.3, 0.7]),
                                     self.cenario, 1000, 9)
        esperado = combine(0.4, avaliacao.expected_cost_term, avaliacao.risk_term)
        self.assertEqual(avaliacao.value, esperado)
        self.assertEqual(avaliacao.components,
                         (avaliacao.expected_cost_term, avaliacao.risk_term))

    def test_ac_analitica_em_dinamica_geometrica(self):
        with self.assertRaises(DomainError):
            evaluate_utility(ac(0.3), self.order, twap_strategy(self.order),
                             get_scenario("scenario3"), 100, 1)

    def test_numerica_aproxima_analitica(self):
        numerica = evaluate_utility(UtilitySpec(kind=UtilityKind.AC_NUMERIC, lam=0.3), self.order,
                                    ExecutionStrategy.from_array([0.65, 0.35]),
                                    self.cenario, 10_000, 42)
        self.assertAlmostEqual(numerica.expected_cost_term, -0.7725, delta=4 * 0.35 / 100)
        self.assertAlmostEqual(numerica.risk_term, 0.1225, delta=0.01)

    def test_duas_caudas_divide_lambda(self):
        custos = np.array([-2.0, -0.5, 0.5, 2.0])
        two = UtilitySpec(kind=UtilityKind.TWO_TAIL, lam=0.5, c_tilde=1.0)
        body = UtilitySpec(kind=UtilityKind.BODY, lam=0.5, c_tilde=1.0)
        self.assertEqual(components_from_costs(two, custos), (0.0, 0.25))
        self.assertEqual(components_from_costs(body, custos), (0.0, 0.5))


class TestUtilityEvaluator(unittest.TestCase):
    """Testes para números aleatórios comuns."""

    def setUp(self):
        self.order = OrderSpec.uniforme(2)
        self.cenario = get_scenario("scenario1")
        self.estrategia = ExecutionStrategy.from_array([0.6, 0.4])

    def test_crn_reutiliza_ruido(self):
        avaliador = UtilityEvaluator(dm(0.3, -1.0), self.order, self.cenario, 2000, 5)
        self.assertEqual(avaliador.value(self.estrategia), avaliador.value(self.estrategia))

    def test_sem_crn_usa_familias_distintas(self):
        avaliador = UtilityEvaluator(dm(0.3, -1.0), self.order, self.cenario, 2000, 5, crn=False)
        primeira = avaliador.evaluate(self.estrategia)
        segunda = avaliador.evaluate(self.estrategia)
        self.assertNotEqual(primeira.expected_cost_term, segunda.expected_cost_term)

    def test_workers_preservam_ordem(self):
        estrategias = [ExecutionStrategy.from_array([v, 1 - v]) for v in np.linspace(0, 1, 9)]
        serial = UtilityEvaluator(dm(0.3, -1.0), self.order, self.cenario, 1000, 5)
        paralelo = UtilityEvaluator(dm(0.3, -1.0), self.order, self.cenario, 1000, 5, workers=4)
        self.assertEqual([a.value for a in serial.evaluate_many(estrategias)],
                         [a.value for a in paralelo.evaluate_many(estrategias)])


class TestSampleStrategies(unittest.TestCase):
    """Testes para a amostragem quase-aleatória no simplex."""

    def test_k2_sem_rejeicao(self):
        resultado = sample_strategies(2, 100)
        self.assertEqual(resultado.points.shape, (100, 1))
        self.assertEqual(resultado.raw_count, 100)
        self.assertTrue(np.all((resultado.points >= 0) & (resultado.points <= 1)))
        for estrategia in resultado.strategies[:10]:
            n = estrategia.as_array()
            self.assertAlmostEqual(n[1], 1 - n[0], places=15)

    def test_aceitacao_k3(self):
        resultado = sample_strategies(3, 2000)
        self.assertAlmostEqual(resultado.acceptance, 0.5, delta=0.02)

    def test_aceitacao_k5(self):
        resultado = sample_strategies(5, 2000)
        self.assertAlmostEqual(resultado.acceptance * 24, 1.0, delta=0.1)

    def test_escala_por_n(self):
        resultado = sample_strategies(3, 50, total_shares=10.0)
        self.assertTrue(np.all(resultado.points.sum(axis=1) <= 10.0 + 1e-9))
        self.assertEqual(resultado.strategies[0].violations(), [])

    def test_deterministico(self):
        np.testing.assert_array_equal(sample_strategies(4, 80).points,
                                      sample_strategies(4, 80).points)

    def test_k_pequeno(self):
        with self.assertRaises(DomainError):
            sample_strategies(1, 100)

    def test_limite_de_pontos_brutos(self):
        with self.assertRaises(SamplingLimitError) as ctx:
            sample_strategies(12, 200, max_raw=100_000)
        self.assertEqual(ctx.exception.details["intervals"], 12)


class TestPolySurface(unittest.TestCase):
    """Testes para o ajuste de superfícies polinomiais."""

    def test_numero_de_monomios(self):
        for d in range(1, 6):
            for grau in (2, 3):
                with self.subTest(d=d, grau=grau):
                    self.assertEqual(len(monomial_exponents(d, grau)), comb(d + grau, grau))

    def test_quadratica_exata(self):
        x = np.arange(8, dtype=float).reshape(-1, 1)
        superficie = fit_poly_surface(x, (x.ravel() - 1) ** 2, 2, lower=[0.0], upper=[1.0])
        np.testing.assert_allclose(superficie.coefficients, [1.0, -2.0, 1.0], atol=1e-9)
        self.assertLess(superficie.rmse, 1e-10)

    def test_dados_constantes(self):
        pontos = sample_strategies(3, 40).points
        superficie = fit_poly_surface(pontos, np.full(len(pontos), 3.0), 2)
        self.assertAlmostEqual(superficie.coefficients[0], 3.0, places=10)
        self.assertTrue(np.all(np.abs(superficie.coefficients[1:]) < 1e-10))

    def test_quadratica_ruidosa(self):
        pontos = sample_strategies(3, 100).points
        verdade = np.array([0.3, 0.2])
        ruido = np.random.default_rng(0).normal(0.0, 0.01, len(pontos))
        valores = 5 * np.sum((pontos - verdade) ** 2, axis=1) + ruido
        superficie = fit_poly_surface(pontos, valores, 2, lower=[0.0, 0.0], upper=[1.0, 1.0])
        np.testing.assert_allclose(minimize_surface_point(superficie, 1.0).point, verdade,
                                   atol=0.02)

    def test_gradiente_analitico(self):
        pontos = sample_strategies(3, 60).points
        valores = pontos[:, 0] ** 3 - 2 * pontos[:, 0] * pontos[:, 1] + pontos[:, 1]
        superficie = fit_poly_surface(pontos, valores, 3)
        y = np.array([0.2, 0.3])
        h = 1e-6
        numerico = [(superficie.evaluate(y + h * e) - superficie.evaluate(y - h * e)) / (2 * h)
                    for e in np.eye(2)]
        np.testing.assert_allclose(superficie.gradient(y), numerico, atol=1e-6)
        np.testing.assert_allclose(superficie.gradient(y), [3 * 0.04 - 0.6, -0.4 + 1], atol=1e-6)

    def test_subdeterminado(self):
        x = np.linspace(0, 1, 5).reshape(-1, 1)
        with self.assertRaises(FitError):
            fit_poly_surface(x, x.ravel(), 2)

    def test_grau_invalido(self):
        with self.assertRaises(ValidationError):
            PolySurface.from_coefficients([0.0, 1.0], 1, 1)


class TestMinimizeSurface(unittest.TestCase):
    """Testes para a descida projetada sobre superfícies."""

    def test_tigela(self):
        superficie = PolySurface.from_coefficients([0.4225, -1.3, 1.0], 1, 2)
        np.testing.assert_allclose(minimize_surface(superficie, 1.0).as_array(), [0.65, 0.35],
                                   atol=1e-6)

    def test_linear_crescente(self):
        superficie = PolySurface.from_coefficients([0.0, 1.0, 0.0], 1, 2)
        np.testing.assert_allclose(minimize_surface(superficie, 1.0).as_array(), [0.0, 1.0],
                                   atol=1e-9)

    def test_inicios(self):
        inicios = start_points(2, 1.0)
        self.assertLessEqual(len(inicios), 8)
        np.testing.assert_allclose(inicios[0], [1 / 3, 1 / 3])
        inicios = start_points(6, 1.0)
        self.assertEqual(len(inicios), 8)

    def test_projecao(self):
        np.testing.assert_allclose(project_feasible([0.2, 0.3], 1.0), [0.2, 0.3])
        np.testing.assert_allclose(project_feasible([-0.5, 0.3], 1.0), [0.0, 0.3])
        np.testing.assert_allclose(project_feasible([1.0, 1.0], 1.0), [0.5, 0.5])
        np.testing.assert_allclose(project_feasible([2.0, -1.0], 1.0), [1.0, 0.0])

    @given(st.lists(st.floats(min_value=-5, max_value=5), min_size=1, max_size=8),
           st.floats(min_value=0.1, max_value=10))
    @settings(max_examples=200, deadline=None)
    def test_projecao_viavel_e_idempotente(self, y, N):
        z = project_feasible(y, N)
        self.assertTrue(np.all(z >= 0))
        self.assertLessEqual(z.sum(), N * (1 + 1e-9))
        np.testing.assert_allclose(project_feasible(z, N), z, atol=1e-9 * N)


class TestBudget(unittest.TestCase):

    def test_padroes_por_cenario(self):
        aritmetico = Budget().resolve(OrderSpec.uniforme(2), get_scenario("scenario1"))
        self.assertEqual((aritmetico.q_target, aritmetico.path_count, aritmetico.degree),
                         (100, 10_000, 2))
        geometrico = Budget().resolve(OrderSpec.uniforme(3), get_scenario("scenario3"))
        self.assertEqual((geometrico.q_target, geometrico.path_count, geometrico.degree),
                         (200, 15_000, 3))

    def test_explicito_prevalece(self):
        budget = Budget(q_target=50, degree=3).resolve(OrderSpec.uniforme(2),
                                                       get_scenario("scenario1"))
        self.assertEqual((budget.q_target, budget.degree), (50, 3))

    def test_invalidos(self):
        with self.assertRaises(ValidationError):
            Budget(degree=4)
        with self.assertRaises(ValidationError):
            Budget(path_count=0)
        with self.assertRaises(ValidationError):
            Budget.model_validate({"paths": 10})
        with self.assertRaises(ValidationError):
            Budget(lambda_grid=[0.5, 1.5])


class TestAcAnalyticOptimum(unittest.TestCase):
    """Testes para o ótimo média-variância exato."""

    def test_k2(self):
        estrategia = ac_analytic_optimum(OrderSpec.uniforme(2), MarketParams(epsilon=0.0), 0.3)
        np.testing.assert_allclose(estrategia.as_array(), [0.65, 0.35], atol=1e-5)

    def test_forma_fechada_k2(self):
        """Para K = 2 nos parâmetros de referência, n_1 = (1 + λ)/2."""
        for lam in (0.0, 0.2, 0.5, 0.9):
            with self.subTest(lam=lam):
                estrategia = ac_analytic_optimum(OrderSpec.uniforme(2), MarketParams(), lam)
                self.assertAlmostEqual(estrategia.shares[0], (1 + lam) / 2, places=5)

    def test_k1(self):
        self.assertEqual(ac_analytic_optimum(OrderSpec.uniforme(1), MarketParams(), 0.5).shares,
                         (1.0,))

    def test_lambda_zero_twap(self):
        estrategia = ac_analytic_optimum(OrderSpec.uniforme(4), MarketParams(), 0.0)
        np.testing.assert_allclose(estrategia.as_array(), [0.25] * 4, atol=1e-4)

    def test_k13_decai(self):
        estrategia = ac_analytic_optimum(OrderSpec.uniforme(13), MarketParams(), 0.3)
        self.assertEqual(estrategia.violations(), [])
        self.assertTrue(np.all(np.diff(estrategia.as_array()) <= 1e-4))


class TestExecutionOptimizer(unittest.TestCase):
    """Testes para os métodos de otimização com utilidade AC analítica."""

    def setUp(self):
        self.otimizador = ExecutionOptimizer()
        self.cenario = get_scenario("scenario1")

    def test_fit_gd_k2(self):
        resultado = self.otimizador.optimize(Method.FIT_GD, ac(0.3), OrderSpec.uniforme(2),
                                             self.cenario)
        np.testing.assert_allclose(resultado.strategy.as_array(), [0.65, 0.35], atol=0.005)
        self.assertAlmostEqual(resultado.utility, 0.5775, delta=0.001)
        self.assertEqual(resultado.diagnostics.accepted_count, 100)

    def test_fit_gd_k3(self):
        resultado = self.otimizador.optimize(Method.FIT_GD, ac(0.3), OrderSpec.uniforme(3),
                                             self.cenario)
        np.testing.assert_allclose(resultado.strategy.as_array(), [0.60, 0.26, 0.14], atol=0.02)

    def test_todos_os_metodos(self):
        execucao = self.otimizador.run(ac(0.3), OrderSpec.uniforme(2), self.cenario,
                                       methods=list(Method))
        self.assertEqual(set(execucao.results), set(Method))
        for method, tolerancia in ((Method.GD, 0.01), (Method.MC, 0.02),
                                   (Method.FIT_MC, 0.01), (Method.FIT_GD, 0.005)):
            with self.subTest(method=method):
                self.assertAlmostEqual(execucao.result(method).strategy.shares[0], 0.65,
                                       delta=tolerancia)
        self.assertEqual(len(execucao.values), execucao.sampling.accepted_count)

    def test_mc_e_minimo_dos_candidatos(self):
        execucao = self.otimizador.run(ac(0.3), OrderSpec.uniforme(2), self.cenario,
                                       methods=[Method.MC])
        self.assertAlmostEqual(execucao.result(Method.MC).utility, float(np.min(execucao.values)),
                               places=12)

    def test_fidelidade_da_superficie(self):
        execucao = self.otimizador.run(ac(0.3), OrderSpec.uniforme(3), self.cenario)
        self.assertLess(execucao.surface.rmse, 1e-9)

    def test_lambda_zero_twap(self):
        for K in (2, 3):
            with self.subTest(K=K):
                resultado = self.otimizador.optimize(Method.FIT_GD, ac(0.0), OrderSpec.uniforme(K),
                                                     self.cenario)
                np.testing.assert_allclose(resultado.strategy.as_array(), [1 / K] * K, atol=0.01)

    def test_invariancia_epsilon(self):
        order = OrderSpec.uniforme(2)
        for spec in (ac(0.3), UtilitySpec(kind=UtilityKind.AC_NUMERIC, lam=0.3)):
            with self.subTest(kind=spec.kind):
                budget = Budget(path_count=2000)
                sem = self.otimizador.optimize(Method.FIT_GD, spec, order, self.cenario, budget)
                com = self.otimizador.optimize(Method.FIT_GD, spec, order,
                                               self.cenario.with_params(epsilon=1.0), budget)
                np.testing.assert_allclose(sem.strategy.as_array(), com.strategy.as_array(),
                                           atol=0.01)

    def test_agressividade_monotona(self):
        primeiros = [self.otimizador.optimize(Method.FIT_GD, ac(lam), OrderSpec.uniforme(2),
                                              self.cenario).strategy.shares[0]
                     for lam in (0.0, 0.3, 0.5, 0.7, 1.0)]
        self.assertTrue(all(b >= a - 1e-9 for a, b in zip(primeiros, primeiros[1:])))

    def test_k1(self):
        resultado = self.otimizador.optimize(Method.MC, dm(0.3, -1.0), OrderSpec.uniforme(1),
                                             self.cenario, Budget(path_count=500))
        self.assertEqual(resultado.strategy.shares, (1.0,))

    def test_reprodutibilidade_crn(self):
        """Mesma semente e orçamento: resultados idênticos com 1, 4 ou 8 workers."""
        order = OrderSpec.uniforme(2)
        resultados = [
            ExecutionOptimizer().optimize(Method.FIT_GD, dm(0.3, -1.0), order, self.cenario,
                                          Budget(path_count=2000, workers=w))
            for w in (1, 4, 8)
        ]
        self.assertEqual(resultados[0], resultados[1])
        self.assertEqual(resultados[0], resultados[2])

    def test_fronteira_ac(self):
        fronteira = self.otimizador.efficient_frontier(UtilityKind.AC_ANALYTIC,
                                                       OrderSpec.uniforme(2), self.cenario,
                                                       [0.0, 0.25, 0.5, 0.75, 1.0])
        np.testing.assert_allclose(fronteira[0].strategy.as_array(), [0.5, 0.5], atol=0.01)
        np.testing.assert_allclose(fronteira[-1].strategy.as_array(), [1.0, 0.0], atol=0.01)
        impacto = [p.impact_term for p in fronteira]
        risco = [p.risk_term for p in fronteira]
        self.assertTrue(all(b >= a - 1e-9 for a, b in zip(impacto, impacto[1:])))
        self.assertTrue(all(b < a for a, b in zip(risco, risco[1:])))


@pytest.mark.slow
class TestDmOptimizer(unittest.TestCase):
    """Ótimos com utilidade DM e retornos t-Student."""

    @classmethod
    def setUpClass(cls):
        cls.otimizador = ExecutionOptimizer()
        cls.order = OrderSpec.uniforme(2)
        cls.cenario = get_scenario("scenario1")

    def _otimo(self, spec, cenario=None, budget=None):
        return self.otimizador.optimize(Method.FIT_GD, spec, self.order, cenario or self.cenario,
                                        budget).strategy.as_array()

    def test_inversao_com_limiar(self):
        baixo = self._otimo(dm(0.3, -1.0))
        alto = self._otimo(dm(0.3, -0.5))
        np.testing.assert_allclose(baixo, [0.57, 0.43], atol=0.05)
        np.testing.assert_allclose(alto, [0.44, 0.56], atol=0.05)
        self.assertGreater(baixo[0], baixo[1])
        self.assertLess(alto[0], alto[1])

    def test_cantos_do_mapa(self):
        celulas = self.otimizador.strategy_map(self.order, self.cenario, [0.0, 1.0],
                                               [-1.0, -0.5, 0.0, 0.5, 1.0])
        self.assertEqual(len(celulas), 10)
        por_chave = {(c.lam, c.c_tilde): c.result.strategy.as_array() for c in celulas}
        for c_tilde in (-1.0, -0.5, 0.0, 0.5, 1.0):
            np.testing.assert_allclose(por_chave[(0.0, c_tilde)], [0.5, 0.5], atol=0.02)
        np.testing.assert_allclose(por_chave[(1.0, -1.0)], [1.0, 0.0], atol=0.02)
        np.testing.assert_allclose(por_chave[(1.0, 0.0)], [0.0, 1.0], atol=0.02)

    def test_fronteira_dm_aproximadamente_linear(self):
        fronteira = self.otimizador.efficient_frontier(UtilityKind.DM, self.order, self.cenario,
                                                       [0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0],
                                                       c_tilde=-1.0)
        ajuste = stats.linregress([p.risk_term for p in fronteira],
                                  [p.impact_term for p in fronteira])
        self.assertGreaterEqual(ajuste.rvalue ** 2, 0.95)

    def test_fronteira_dm_monotona(self):
        """No vértice (1, 0) o termo de risco segue a superfície, perto de Φ(−1)."""
        fronteira = self.otimizador.efficient_frontier(UtilityKind.DM, self.order, self.cenario,
                                                       [0.3, 0.5, 0.7, 0.8, 0.9, 1.0],
                                                       c_tilde=-1.0)
        impacto = [p.impact_term for p in fronteira]
        risco = [p.risk_term for p in fronteira]
        self.assertTrue(all(b >= a - 1e-6 for a, b in zip(impacto, impacto[1:])), impacto)
        self.assertTrue(all(b <= a + 1e-6 for a, b in zip(risco, risco[1:])), risco)
        np.testing.assert_allclose(fronteira[-1].strategy.as_array(), [1.0, 0.0], atol=0.02)
        self.assertAlmostEqual(risco[-1], stats.norm.cdf(-1.0), delta=0.03)
        self.assertAlmostEqual(impacto[-1], 1.0, delta=0.02)

    def test_student_t(self):
        student = self.cenario.model_copy(update={"returns": ReturnsSpec.student_unit_variance(5)})
        numerica = UtilitySpec(kind=UtilityKind.AC_NUMERIC, lam=0.7)
        ac_student = self._otimo(numerica, student)
        np.testing.assert_allclose(ac_student, [0.85, 0.15], atol=0.03)
        np.testing.assert_allclose(ac_student, self._otimo(ac(0.7)), atol=0.02)

        dm_student = self._otimo(dm(0.7, -1.0), student)
        dm_gauss = self._otimo(dm(0.7, -1.0))
        np.testing.assert_allclose(dm_student, [0.81, 0.19], atol=0.03)
        np.testing.assert_allclose(dm_gauss, [0.84, 0.16], atol=0.03)
        self.assertGreater(dm_student[1], dm_gauss[1])

    def test_modelos_de_impacto(self):
        """Ótimos n_1 por modelo de impacto, utilidade e retornos (K=2, λ=0.3, c̃=−1)."""
        tabela = {
            ImpactKind.LIN_EXP: (0.56, 0.29),
            ImpactKind.LIN_POW: (0.43, 0.33),
            ImpactKind.SQRT: (0.43, 0.41),
        }
        retornos = {"gaussian": ReturnsSpec(), "student_t": ReturnsSpec.student_unit_variance(5)}
        utilidades = (UtilitySpec(kind=UtilityKind.AC_NUMERIC, lam=0.3), dm(0.3, -1.0))
        base = get_scenario("scenario3")

        for impacto, esperados in tabela.items():
            for nome, returns in retornos.items():
                cenario = base.model_copy(update={"impact": impacto, "returns": returns})
                for spec, n_1 in zip(utilidades, esperados):
                    with self.subTest(impacto=impacto.value, retornos=nome, utilidade=spec.kind.value):
                        otimo = self._otimo(spec, cenario)
                        np.testing.assert_allclose(otimo, [n_1, 1.0 - n_1], atol=0.05)


if __name__ == '__main__':
    unittest.main()
