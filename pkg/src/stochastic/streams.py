"""Subfluxos pseudoaleatórios reprodutíveis."""

from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class SeededStream(BaseModel):
    """Fluxo determinado por (semente mestre, família, índice).

    O gerador é reconstruído a cada chamada de `generator()`, portanto
    cópias do mesmo fluxo produzem a mesma sequência em qualquer processo.
    """
    model_config = ConfigDict(frozen=True)

    master_seed: int = Field(..., ge=0, lt=2 ** 64)
    stream_index: int = Field(..., ge=0)
    family: Optional[int] = Field(None, ge=0)

    @property
    def spawn_key(self) -> Tuple[int, ...]:
        if self.family is None:
            return (self.stream_index,)
        return (self.family, self.stream_index)

    def generator(self) -> np.random.Generator:
        seq = np.random.SeedSequence(entropy=self.master_seed, spawn_key=self.spawn_key)
        return np.random.Generator(np.random.PCG64(seq))


def substream(master_seed: int, index: int, family: Optional[int] = None) -> SeededStream:
    """Subfluxo `index` da semente mestre; `family` separa conjuntos independentes."""
    return SeededStream(master_seed=master_seed, stream_index=index, family=family)
