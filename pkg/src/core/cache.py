"""Cache em memória de matrizes de ruído."""

import hashlib
import json
import logging
from collections import OrderedDict
from typing import Any, Dict, Optional

import numpy as np

logger = logging.getLogger(__name__)


class NoiseCache:
    """Gerenciador de cache de matrizes de ruído (caminhos × K).

    Com números aleatórios comuns a mesma matriz serve a todos os
    candidatos de uma execução; a chave identifica o gerador completo.
    """

    def __init__(self, max_items: int = 8):
        self.max_items = max_items
        self._memory_cache: "OrderedDict[str, np.ndarray]" = OrderedDict()
        self._hits = 0
        self._misses = 0

    def _generate_key(self, *args, **kwargs) -> str:
        """Gera chave única para o cache."""
        key_data = json.dumps({"args": args, "kwargs": kwargs}, sort_keys=True, default=str)
        return hashlib.md5(key_data.encode()).hexdigest()

    def get(self, key: str) -> Optional[np.ndarray]:
        """Recupera matriz do cache."""
        if key in self._memory_cache:
            self._memory_cache.move_to_end(key)
            self._hits += 1
            return self._memory_cache[key]
        self._misses += 1
        return None

    def set(self, key: str, value: np.ndarray) -> None:
        """Armazena matriz (somente leitura) no cache."""
        if self.max_items <= 0:
            return
        value.setflags(write=False)
        self._memory_cache[key] = value
        self._memory_cache.move_to_end(key)
        while len(self._memory_cache) > self.max_items:
            antiga, _ = self._memory_cache.popitem(last=False)
            logger.debug("Matriz de ruído %s removida do cache", antiga)

    def get_or_create(self, factory, *args, **kwargs) -> np.ndarray:
        """Retorna a matriz da chave (args, kwargs), gerando-a se necessário."""
        key = self._generate_key(*args, **kwargs)
        valor = self.get(key)
        if valor is None:
            valor = factory()
            self.set(key, valor)
        return valor

    def clear(self) -> None:
        """Limpa todo o cache."""
        self._memory_cache.clear()

    def get_stats(self) -> Dict[str, Any]:
        """Retorna estatísticas do cache."""
        return {
            "memory_items": len(self._memory_cache),
            "max_items": self.max_items,
            "hits": self._hits,
            "misses": self._misses,
        }
