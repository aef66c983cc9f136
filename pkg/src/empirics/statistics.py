"""Momentos, probabilidades empíricas e histogramas."""

from typing import Optional, Tuple, Union

import numpy as np
from scipy import stats

from src.core.errors import DomainError
from src.costs.models import CostSample
from src.empirics.models import MomentReport

Amostra = Union[CostSample, np.ndarray, list]

_RESOLUCAO_RELATIVA = 1e-12


def as_array(sample: Amostra) -> np.ndarray:
    """Vetor float de uma CostSample ou sequência."""
    if isinstance(sample, CostSample):
        return sample.costs
    return np.asarray(sample, dtype=float).ravel()


def _nao_vazia(x: np.ndarray) -> np.ndarray:
    if x.size == 0:
        raise DomainError("amostra vazia")
    return x


def moments(sample: Amostra) -> MomentReport:
    """Momentos amostrais; curtose não excesso (Gaussiana = 3)."""
    x = as_array(sample)
    if x.size < 2:
        raise DomainError(f"momentos exigem ao menos 2 observações (recebidas {x.size})")
    media = float(np.mean(x))
    std = float(np.std(x, ddof=1))
    # variância perdida no arredondamento conta como nula
    if not std > _RESOLUCAO_RELATIVA * max(abs(media), 1.0):
        raise DomainError("momentos de amostra constante: variância nula",
                          {"std": std, "mean": media})
    return MomentReport(mean=media, std=std, skewness=float(stats.skew(x)),
                        kurtosis=float(stats.kurtosis(x, fisher=False)), count=int(x.size))


def tail_probability(sample: Amostra, c_tilde: float) -> float:
    """Fração das entradas com c ≤ c̃ (FDA empírica em c̃)."""
    x = _nao_vazia(as_array(sample))
    return float(np.count_nonzero(x <= c_tilde) / x.size)


def body_probability(sample: Amostra, c_tilde: float) -> float:
    """Fração com |c| ≤ |c̃|."""
    x = _nao_vazia(as_array(sample))
    return float(np.count_nonzero(np.abs(x) <= abs(c_tilde)) / x.size)


def two_tail_probability(sample: Amostra, c_tilde: float) -> float:
    """Fração com c ≤ −|c̃| mais fração com c ≥ |c̃|."""
    x = _nao_vazia(as_array(sample))
    limite = abs(c_tilde)
    return float((np.count_nonzero(x <= -limite) + np.count_nonzero(x >= limite)) / x.size)


def histogram(sample: Amostra, bins: Union[str, int, np.ndarray, list] = "fd",
              limites: Optional[Tuple[float, float]] = None) -> Tuple[np.ndarray, np.ndarray]:
    """(bordas, contagens); regra padrão de Freedman-Diaconis."""
    x = _nao_vazia(as_array(sample))
    contagens, bordas = np.histogram(x, bins=bins, range=limites)
    return bordas, contagens
