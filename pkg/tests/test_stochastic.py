"""Testes para fluxos aleatórios, distribuições e pontos quase-aleatórios."""

import math
import unittest

import numpy as np
from pydantic import ValidationError
from scipy import integrate, stats

from src.core.errors import DomainError
from src.core.models import ReturnsSpec
from src.stochastic.distributions import (
    DistKind, DistributionSpec, cdf, noise_matrix, pdf, sample,
)
from src.stochastic.quasirandom import low_discrepancy_blocks, low_discrepancy_points
from src.stochastic.streams import SeededStream, substream

MILHAO = 10 ** 6


class TestSubstream(unittest.TestCase):
    """Testes para subfluxos."""

    def test_injetivo(self):
        a = substream(42, 0).generator().standard_normal(10)
        b = substream(42, 1).generator().standard_normal(10)
        self.assertFalse(np.array_equal(a, b))

    def test_reprodutivel(self):
        a = substream(42, 7).generator().standard_normal(100)
        b = SeededStream(master_seed=42, stream_index=7).generator().standard_normal(100)
        np.testing.assert_array_equal(a, b)

    def test_familias_independentes(self):
        a = substream(42, 0, family=1).generator().random(5)
        b = substream(42, 0, family=2).generator().random(5)
        c = substream(42, 0).generator().random(5)
        self.assertFalse(np.array_equal(a, b))
        self.assertFalse(np.array_equal(a, c))

    def test_correlacao(self):
        a = substream(42, 0).generator().standard_normal(100_000)
        b = substream(42, 1).generator().standard_normal(100_000)
        self.assertLess(abs(np.corrcoef(a, b)[0, 1]), 0.01)

    def test_semente_64_bits(self):
        stream = substream(2 ** 64 - 1, 3)
        self.assertEqual(stream.generator().random(3).shape, (3,))
        with self.assertRaises(ValidationError):
            substream(2 ** 64, 0)


class TestDistributionSpec(unittest.TestCase):

    def test_sigma_positivo(self):
        with self.assertRaises(ValidationError):
            DistributionSpec.gaussian(0.0, 0.0)

    def test_student_exige_nu(self):
        with self.assertRaises(ValidationError):
            DistributionSpec(kind=DistKind.STUDENT_T, sigma=1.0)

    def test_desvio_padrao(self):
        self.assertAlmostEqual(DistributionSpec.student_t(0, 1, 5).std, math.sqrt(5 / 3))
        self.assertEqual(DistributionSpec.gaussian(0, 2).std, 2.0)

    def test_from_returns(self):
        d = DistributionSpec.from_returns(ReturnsSpec.student_unit_variance(5))
        self.assertAlmostEqual(d.std, 1.0)
        self.assertIs(d.kind, DistKind.STUDENT_T)


class TestSample(unittest.TestCase):
    """Testes de amostragem (momentos dentro de bandas de erro padrão)."""

    def test_gaussiana(self):
        x = sample(DistributionSpec.gaussian(), MILHAO, substream(42, 0))
        self.assertLess(abs(x.mean()), 0.004)
        self.assertLess(abs(x.std(ddof=1) - 1.0), 0.003)

    def test_student_escala_unitaria(self):
        x = sample(DistributionSpec.student_t(0, 1, 5), MILHAO, substream(42, 1))
        self.assertLess(abs(x.std(ddof=1) - math.sqrt(5 / 3)), 0.01)

    def test_student_variancia_unitaria(self):
        x = sample(DistributionSpec.student_t(0, math.sqrt(3 / 5), 5), MILHAO, substream(42, 2))
        self.assertLess(abs(x.std(ddof=1) - 1.0), 0.01)

    def test_transformacao_quantil(self):
        dist = DistributionSpec.student_t(0.3, 0.8, 5)
        x = sample(dist, MILHAO, substream(7, 0))
        estatistica = stats.kstest(x, lambda v: cdf(dist, v)).statistic
        self.assertLess(estatistica, 1.95 / math.sqrt(MILHAO))

    def test_count_invalido(self):
        with self.assertRaises(ValueError):
            sample(DistributionSpec.gaussian(), 0, substream(1, 0))

    def test_reprodutivel(self):
        dist = DistributionSpec.student_t(0, 1, 5)
        np.testing.assert_array_equal(sample(dist, 50, substream(3, 4)),
                                      sample(dist, 50, substream(3, 4)))


class TestDensidades(unittest.TestCase):
    """Testes para pdf e cdf."""

    GRADE = [
        DistributionSpec.gaussian(0.0, 1.0),
        DistributionSpec.gaussian(-0.5, 0.3),
        DistributionSpec.student_t(0.0, 1.0, 3.0),
        DistributionSpec.student_t(0.2, 0.5, 5.0),
        DistributionSpec.student_t(0.0, 2.0, 30.0),
    ]

    def test_valores(self):
        self.assertAlmostEqual(pdf(DistributionSpec.gaussian(), 0.0), 0.39894, places=5)
        self.assertAlmostEqual(cdf(DistributionSpec.gaussian(), 0.0), 0.5)
        self.assertAlmostEqual(cdf(DistributionSpec.student_t(0, 1, 5), 0.0), 0.5)

    def test_student_parametrizacao_de_escala(self):
        """Densidade com σ como escala, não como desvio padrão."""
        nu, sigma, x = 5.0, 0.7, 0.4
        esperado = (math.gamma((nu + 1) / 2) / (sigma * math.sqrt(nu * math.pi) * math.gamma(nu / 2))
                    * (1 + (x / sigma) ** 2 / nu) ** (-(nu + 1) / 2))
        self.assertAlmostEqual(pdf(DistributionSpec.student_t(0, sigma, nu), x), esperado, places=12)

    def test_integral_unitaria(self):
        for dist in self.GRADE:
            with self.subTest(dist=dist):
                total, _ = integrate.quad(lambda v: pdf(dist, v), -np.inf, np.inf)
                self.assertAlmostEqual(total, 1.0, delta=1e-6)

    def test_cdf_integral_da_pdf(self):
        for dist in self.GRADE:
            for x in (-1.5, 0.0, 0.7):
                with self.subTest(dist=dist, x=x):
                    parcial, _ = integrate.quad(lambda v: pdf(dist, v), -np.inf, x)
                    self.assertAlmostEqual(float(cdf(dist, x)), parcial, delta=1e-6)

    def test_cdf_monotona(self):
        x = np.linspace(-30, 30, 2001)
        for dist in self.GRADE:
            valores = cdf(dist, x)
            self.assertTrue(np.all(np.diff(valores) >= 0))
            self.assertLess(valores[0], 1e-3)
            self.assertGreater(valores[-1], 1 - 1e-3)

    def test_limite_gaussiano(self):
        x = np.linspace(-5, 5, 1001)
        diferenca = np.abs(pdf(DistributionSpec.student_t(0, 1, 200), x)
                           - pdf(DistributionSpec.gaussian(0, 1), x))
        self.assertLess(diferenca.max(), 1e-3)


class TestNoiseMatrix(unittest.TestCase):

    def test_linhas_sao_subfluxos(self):
        dist = DistributionSpec.gaussian()
        matriz = noise_matrix(dist, 3, 5, master_seed=11)
        self.assertEqual(matriz.shape, (5, 3))
        np.testing.assert_array_equal(matriz[4], sample(dist, 3, substream(11, 4)))

    def test_prefixo_estavel(self):
        dist = DistributionSpec.student_t(0, 1, 5)
        np.testing.assert_array_equal(noise_matrix(dist, 2, 10, 5)[:4], noise_matrix(dist, 2, 4, 5))


class TestLowDiscrepancy(unittest.TestCase):
    """Testes para a sequência de Halton."""

    def test_van_der_corput(self):
        np.testing.assert_allclose(low_discrepancy_points(1, 4).ravel(),
                                   [0.5, 0.25, 0.75, 0.125])

    def test_primeiro_ponto_2d(self):
        np.testing.assert_allclose(low_discrepancy_points(2, 1)[0], [0.5, 1 / 3])

    def test_hipercubo(self):
        for dim in (1, 3, 8, 16):
            pontos = low_discrepancy_points(dim, 1000)
            self.assertEqual(pontos.shape, (1000, dim))
            self.assertTrue(np.all((pontos >= 0) & (pontos < 1)))

    def test_deterministico(self):
        np.testing.assert_array_equal(low_discrepancy_points(5, 100),
                                      low_discrepancy_points(5, 100))

    def test_blocos_continuam_sequencia(self):
        blocos = low_discrepancy_blocks(3, 40)
        juntos = np.vstack([next(blocos), next(blocos)])
        np.testing.assert_allclose(juntos, low_discrepancy_points(3, 80))

    def test_dimensao_fora_do_intervalo(self):
        with self.assertRaises(DomainError):
            low_discrepancy_points(0, 4)
        with self.assertRaises(DomainError):
            low_discrepancy_points(17, 4)


if __name__ == '__main__':
    unittest.main()
