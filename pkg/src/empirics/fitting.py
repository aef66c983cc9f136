"""Ajustes de máxima verossimilhança: Gaussiana e t-Student."""

import logging
import math

import numpy as np
from scipy import optimize, stats

from src.core.errors import DomainError, FitError
from src.empirics.models import FitResult
from src.empirics.statistics import Amostra, as_array, moments
from src.stochastic.distributions import DistributionSpec

logger = logging.getLogger(__name__)

NU_MINIMO = 2.01
_NU_SEM_CAUDA = 30.0


def fit_gaussian(sample: Amostra) -> FitResult:
    """Média e desvio padrão amostrais (mesmos valores de `moments`)."""
    x = as_array(sample)
    if x.size < 10:
        raise FitError(f"ajuste Gaussiano exige ao menos 10 observações (recebidas {x.size})")
    mu = float(np.mean(x))
    sigma = float(np.std(x, ddof=1))
    if not sigma > 0:
        raise FitError("amostra constante: σ = 0", details={"valor": mu})
    loglik = float(np.sum(stats.norm.logpdf(x, loc=mu, scale=sigma)))
    return FitResult(dist=DistributionSpec.gaussian(mu, sigma), log_likelihood=loglik)


def _chute_inicial(x: np.ndarray):
    try:
        m = moments(x)
    except DomainError as e:
        raise FitError("amostra constante: σ = 0") from e
    if m.kurtosis > 3.0:
        nu = 4.0 + 6.0 / (m.kurtosis - 3.0)
    else:
        nu = _NU_SEM_CAUDA
    nu = min(max(nu, 2.5), 200.0)
    sigma = m.std * math.sqrt((nu - 2.0) / nu)
    return np.array([m.mean, math.log(sigma), math.log(nu - NU_MINIMO)])


def _desempacotar(theta: np.ndarray):
    return theta[0], math.exp(theta[1]), NU_MINIMO + math.exp(theta[2])


def fit_student_t(sample: Amostra, max_iter: int = 4000) -> FitResult:
    """MLE de (μ, σ, ν) por Nelder-Mead a partir do casamento de momentos.

    ν é contínuo e limitado inferiormente por 2.01.
    """
    x = as_array(sample)
    if x.size < 50:
        raise FitError(f"ajuste t-Student exige ao menos 50 observações (recebidas {x.size})")

    def nll(theta: np.ndarray) -> float:
        mu, sigma, nu = _desempacotar(theta)
        valor = -np.sum(stats.t.logpdf(x, df=nu, loc=mu, scale=sigma))
        return float(valor) if np.isfinite(valor) else 1e300

    theta0 = _chute_inicial(x)
    escala = max(1.0, abs(nll(theta0)))
    res = optimize.minimize(
        nll, theta0, method="Nelder-Mead",
        options={"xatol": 1e-8, "fatol": 1e-8 * escala, "maxiter": max_iter},
    )
    mu, sigma, nu = _desempacotar(res.x)
    if not res.success:
        logger.warning("Ajuste t-Student não convergiu (%s); usando melhor ponto", res.message)
    logger.debug("Ajuste t-Student: μ=%.6g σ=%.6g ν=%.4g (%d iterações)", mu, sigma, nu, res.nit)
    return FitResult(
        dist=DistributionSpec.student_t(float(mu), float(sigma), float(nu)),
        log_likelihood=float(-res.fun), converged=bool(res.success), iterations=int(res.nit),
    )
