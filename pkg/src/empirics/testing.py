"""Teste de Kolmogorov-Smirnov e interseção de funções de distribuição."""

from typing import Tuple

from scipy import optimize, stats

from src.core.errors import DomainError
from src.empirics.models import KsReport
from src.empirics.statistics import Amostra, as_array
from src.stochastic.distributions import DistributionSpec, cdf

NIVEL = 0.01


def ks_test(sample: Amostra, dist: DistributionSpec) -> KsReport:
    """Estatística D e valor-p assintótico (série de Kolmogorov em √n·D)."""
    x = as_array(sample)
    if x.size < 35:
        raise DomainError(f"teste KS exige ao menos 35 observações (recebidas {x.size})")
    resultado = stats.ks_1samp(x, dist.frozen().cdf, alternative="two-sided", method="asymp")
    p = float(min(max(resultado.pvalue, 0.0), 1.0))
    return KsReport(statistic=float(resultado.statistic), p_value=p,
                    rejected_at_1pct=p < NIVEL, count=int(x.size))


def cdf_intersection(dist_a: DistributionSpec, dist_b: DistributionSpec,
                     bracket: Tuple[float, float] = (-4.0, -1.0)) -> float:
    """Raiz de F_a − F_b no intervalo, por bissecção até 1e-10."""
    a, b = bracket

    def diferenca(x: float) -> float:
        return float(cdf(dist_a, x) - cdf(dist_b, x))

    fa, fb = diferenca(a), diferenca(b)
    if not fa * fb < 0:
        raise DomainError(
            "as funções de distribuição não trocam de ordem no intervalo",
            details={"bracket": [a, b], "fa": fa, "fb": fb},
        )
    return float(optimize.bisect(diferenca, a, b, xtol=1e-10))
