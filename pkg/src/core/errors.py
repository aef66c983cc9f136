"""Hierarquia de exceções do laboratório de custos de execução."""

from typing import List, Optional


class TCAError(Exception):
    """Exceção base para erros do laboratório."""

    def __init__(self, message: str, details: Optional[dict] = None):
        super().__init__(message)
        self.details = details or {}


class StrategyValidationError(TCAError):
    """Estratégia, ordem ou cenário violam invariantes."""

    def __init__(self, violations: List[str], details: Optional[dict] = None):
        super().__init__("; ".join(violations) or "estratégia inválida", details)
        self.violations = list(violations)


class DomainError(TCAError):
    """Argumento fora do domínio de uma função de impacto."""


class SamplingLimitError(TCAError):
    """Amostragem quase-aleatória do simplex excedeu o limite de pontos brutos."""


class FitError(TCAError):
    """Falha no ajuste de distribuição ou de superfície."""


class BenchmarkError(TCAError):
    """Dados de mercado insuficientes para o benchmark pedido."""


class ConfigError(TCAError):
    """Configuração de execução inválida."""
