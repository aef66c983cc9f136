"""Custos de transação: fórmulas, momentos analíticos, benchmarks e simulação."""

from .models import BenchmarkKind, CostSample, FillSequence, MarketTape
from .formulas import (
    ac_utility, cost_ac_closed, cost_geometric, cost_is, expected_cost_ac, variance_ac,
)
from .benchmarks import (
    benchmark_price, cost_vs_benchmark, pov_schedule, pov_strategy, vwap_strategy,
)
from .simulation import scenario_noise, simulate_cost_sample
from .io import read_fills, read_market_tape

__all__ = [
    "BenchmarkKind", "CostSample", "FillSequence", "MarketTape",
    "ac_utility", "cost_ac_closed", "cost_geometric", "cost_is", "expected_cost_ac",
    "variance_ac", "benchmark_price", "cost_vs_benchmark", "pov_schedule", "pov_strategy",
    "vwap_strategy", "scenario_noise", "simulate_cost_sample", "read_fills",
    "read_market_tape",
]
