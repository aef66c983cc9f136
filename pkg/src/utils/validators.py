"""Funções de validação."""

import math
from typing import List, Optional


def validar_finito(valor, nome: str = "valor") -> float:
    """Valida número real finito."""
    try:
        v = float(valor)
    except (ValueError, TypeError) as e:
        raise ValueError(f"{nome} inválido: {e}")
    if not math.isfinite(v):
        raise ValueError(f"{nome} deve ser finito (recebido {valor})")
    return v


def validar_grade(texto: str, minimo: Optional[float] = None,
                  maximo: Optional[float] = None, nome: str = "grade") -> List[float]:
    """Converte '0,0.5,1' em lista de floats finitos dentro de [minimo, maximo]."""
    if not isinstance(texto, str) or not texto.strip():
        raise ValueError(f'{nome} vazia')

    valores = [validar_finito(parte.strip(), nome) for parte in texto.split(',') if parte.strip()]
    for v in valores:
        if minimo is not None and v < minimo:
            raise ValueError(f'{nome}: {v} < {minimo}')
        if maximo is not None and v > maximo:
            raise ValueError(f'{nome}: {v} > {maximo}')
    return valores
