"""Funções de formatação."""

from typing import Iterable


def formatar_numero(valor: float, digitos: int = 6) -> str:
    """Formata número com `digitos` algarismos significativos."""
    try:
        return f'{float(valor):.{digitos}g}'
    except (ValueError, TypeError):
        return str(valor)


def formatar_estrategia(shares: Iterable[float], casas: int = 2) -> str:
    """Formata estratégia como (n_1,…,n_K)."""
    return "(" + ", ".join(f'{float(n):.{casas}f}' for n in shares) + ")"


def formatar_probabilidade(p: float) -> str:
    """Probabilidade em porcentagem."""
    if p < 0.001:
        return f'{p * 100:.3f}%'
    return f'{p * 100:.1f}%'
