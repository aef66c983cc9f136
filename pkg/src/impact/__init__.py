"""Funções de impacto e simulação de trajetórias de preço."""

from .functions import perm_impact, propagator_impact, propagator_profile, temp_impact
from .paths import PricePath, simulate_path_ac, simulate_path_geometric

__all__ = [
    "perm_impact", "propagator_impact", "propagator_profile", "temp_impact",
    "PricePath", "simulate_path_ac", "simulate_path_geometric",
]
