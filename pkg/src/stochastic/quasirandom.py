"""Sequência de Halton (quase-aleatória) sem embaralhamento."""

from typing import Iterator

import numpy as np
from scipy.stats import qmc

from src.core.errors import DomainError

DIMENSAO_MAXIMA = 16


def _engine(dim: int) -> qmc.Halton:
    if not 1 <= dim <= DIMENSAO_MAXIMA:
        raise DomainError(
            f"Dimensão {dim} fora de [1, {DIMENSAO_MAXIMA}] para pontos quase-aleatórios",
            details={"dim": dim},
        )
    engine = qmc.Halton(d=dim, scramble=False)
    # o primeiro ponto da sequência é a origem
    engine.fast_forward(1)
    return engine


def low_discrepancy_points(dim: int, count: int) -> np.ndarray:
    """Primeiros `count` pontos de Halton em [0,1)^dim (bases = primeiros primos)."""
    if count < 1:
        raise ValueError(f"count deve ser ≥ 1 (recebido {count})")
    return _engine(dim).random(count)


def low_discrepancy_blocks(dim: int, block_size: int) -> Iterator[np.ndarray]:
    """Continua a mesma sequência de `low_discrepancy_points` em blocos."""
    engine = _engine(dim)
    while True:
        yield engine.random(block_size)
