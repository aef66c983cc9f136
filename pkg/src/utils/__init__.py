"""Utilitários diversos."""

from .formatters import formatar_estrategia, formatar_numero, formatar_probabilidade
from .validators import validar_finito, validar_grade

__all__ = [
    "formatar_estrategia", "formatar_numero", "formatar_probabilidade",
    "validar_finito", "validar_grade",
]
