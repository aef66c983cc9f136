"""Amostragem quase-aleatória de estratégias no simplex."""

import logging
from math import comb, factorial
from typing import Optional

import numpy as np

from src.core.errors import DomainError, SamplingLimitError
from src.optimizer.models import SamplingResult
from src.stochastic.quasirandom import low_discrepancy_blocks

logger = logging.getLogger(__name__)

MAX_RAW_PADRAO = 10 ** 7
_BLOCO_MAXIMO = 200_000


def minimum_fit_size(dimension: int, degree: int = 2) -> int:
    """Duas vezes o número de coeficientes do polinômio de grau `degree`."""
    return 2 * comb(dimension + degree, degree)


def sample_strategies(intervals: int, q_target: int, total_shares: float = 1.0,
                      max_raw: int = MAX_RAW_PADRAO, min_accepted: Optional[int] = None) -> SamplingResult:
    """Pontos de Halton em [0,N]^{K−1} com Σ n_k ≤ N; n_K completa a ordem.

    A aceitação esperada é 1/(K−1)!, logo K ≥ 12 esgota o limite de
    10^7 pontos brutos.
    """
    if intervals < 2:
        raise DomainError(f"amostragem exige K ≥ 2 (recebido {intervals})")
    if q_target < 1:
        raise DomainError(f"q_target deve ser ≥ 1 (recebido {q_target})")
    d = intervals - 1
    if min_accepted is None:
        min_accepted = min(q_target, minimum_fit_size(d))

    taxa = 1.0 / factorial(d)
    bloco = int(min(max(q_target / taxa * 1.1, 1024), _BLOCO_MAXIMO))
    aceitos = []
    n_aceitos = 0
    brutos = 0
    for pontos in low_discrepancy_blocks(d, bloco):
        restante = max_raw - brutos
        if restante <= 0:
            break
        pontos = pontos[:restante] * total_shares
        # tolerância para pontos exatamente sobre a face Σ = N
        mascara = pontos.sum(axis=1) <= total_shares * (1 + 1e-12)
        indices = np.flatnonzero(mascara)
        falta = q_target - n_aceitos
        if len(indices) >= falta:
            indices = indices[:falta]
            usados = int(indices[-1]) + 1
        else:
            usados = len(pontos)
        brutos += usados
        aceitos.append(pontos[indices])
        n_aceitos += len(indices)
        logger.debug("Bloco de %d pontos brutos: %d aceitos (total %d)",
                     usados, len(indices), n_aceitos)
        if n_aceitos >= q_target:
            break

    if n_aceitos < min_accepted:
        raise SamplingLimitError(
            f"Apenas {n_aceitos} candidatos aceitos em {brutos} pontos brutos para K = {intervals}; "
            f"a aceitação 1/{d}! exigiria mais de {max_raw} pontos (para K ≥ 12, Q > 10^8)",
            details={"intervals": intervals, "raw": brutos, "accepted": n_aceitos},
        )
    if n_aceitos < q_target:
        logger.warning("Somente %d de %d candidatos aceitos dentro do limite", n_aceitos, q_target)

    pontos = np.vstack(aceitos)
    return SamplingResult(points=pontos, total_shares=total_shares,
                          raw_count=brutos, accepted_count=len(pontos))
