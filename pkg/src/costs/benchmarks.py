"""Preços de benchmark e algoritmos de execução clássicos (TWAP, VWAP, POV)."""

import logging
from typing import Optional

import numpy as np

from src.core.errors import BenchmarkError
from src.core.models import ExecutionStrategy, OrderSpec
from src.costs.models import BenchmarkKind, FillSequence, MarketTape

logger = logging.getLogger(__name__)


def _exigir_volume(tape: MarketTape, kind: BenchmarkKind) -> None:
    if tape.total_volume <= 0:
        raise BenchmarkError(
            f"Benchmark {kind.value.upper()} exige volume total positivo",
            details={"volumes": list(tape.volumes)},
        )


def _exigir_participacao(participation: Optional[float]) -> float:
    if participation is None or not 0 < participation <= 1:
        raise BenchmarkError(
            "PWP exige taxa de participação η_p em (0, 1]",
            details={"participation": participation},
        )
    return participation


def pov_schedule(tape: MarketTape, participation: float,
                 total_shares: Optional[float] = None) -> np.ndarray:
    """n_k = η_p ν_k, truncado no saldo remanescente quando N é dado."""
    participation = _exigir_participacao(participation)
    alvo = participation * tape.volume_array()
    if total_shares is None:
        return alvo
    executado = np.minimum(np.cumsum(alvo), total_shares)
    return np.diff(executado, prepend=0.0)


def benchmark_price(kind: BenchmarkKind, tape: MarketTape, participation: Optional[float] = None,
                    total_shares: Optional[float] = None) -> float:
    """Preço de referência do benchmark `kind` sobre a fita de mercado."""
    kind = BenchmarkKind(kind)
    precos = tape.price_array()

    if kind is BenchmarkKind.TWAP:
        return float(precos.mean())
    if kind is BenchmarkKind.VWAP:
        _exigir_volume(tape, kind)
        return float(np.dot(tape.volume_array(), precos) / tape.total_volume)
    if kind is BenchmarkKind.PWP:
        _exigir_volume(tape, kind)
        pesos = pov_schedule(tape, participation, total_shares)
        if pesos.sum() <= 0:
            raise BenchmarkError("Agenda POV sem volume executado")
        return float(np.dot(pesos, precos) / pesos.sum())
    if kind is BenchmarkKind.MO:
        return float(tape.p_open)
    if kind is BenchmarkKind.MC:
        return float(tape.p_close)
    return float(tape.p_start)


def cost_vs_benchmark(fills: FillSequence, tape: MarketTape, kind: BenchmarkKind, xi: int,
                      total_shares: float, participation: Optional[float] = None) -> float:
    """c = ξ[(1/N) Σ n_k^exe p_k^exe − p^bmk]; positivo = desempenho superior."""
    if not total_shares > 0:
        raise BenchmarkError(f"N deve ser positivo (recebido {total_shares})")
    fills.check(total_shares)
    referencia = benchmark_price(kind, tape, participation, total_shares)
    custo = xi * (fills.notional() / total_shares - referencia)
    logger.info("Custo vs %s: %.6g (preço de referência %.6g)",
                BenchmarkKind(kind).value.upper(), custo, referencia)
    return float(custo)


def vwap_strategy(order: OrderSpec, tape: MarketTape) -> ExecutionStrategy:
    """Agenda proporcional ao volume: n_k = ν_k N / V."""
    _exigir_volume(tape, BenchmarkKind.VWAP)
    if len(tape.volumes) != order.intervals:
        raise BenchmarkError(f"Fita com {len(tape.volumes)} barras, ordem com K = {order.intervals}")
    return ExecutionStrategy.from_array(
        tape.volume_array() * order.total_shares / tape.total_volume, order.total_shares)


def pov_strategy(order: OrderSpec, tape: MarketTape, participation: float) -> ExecutionStrategy:
    """Agenda POV truncada em N; o saldo não executado fica no último intervalo."""
    if len(tape.volumes) != order.intervals:
        raise BenchmarkError(f"Fita com {len(tape.volumes)} barras, ordem com K = {order.intervals}")
    n = pov_schedule(tape, participation, order.total_shares)
    saldo = order.total_shares - n.sum()
    if saldo > 0:
        logger.warning("POV com η_p = %.3g não completa a ordem; %.6g ações no último intervalo",
                       participation, saldo)
        n[-1] += saldo
    return ExecutionStrategy.from_array(n, order.total_shares)
