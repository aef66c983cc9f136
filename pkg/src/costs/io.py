"""Leitura de fitas de mercado e execuções em CSV."""

from pathlib import Path
from typing import Optional, Union

import pandas as pd
from pydantic import ValidationError

from src.core.errors import BenchmarkError
from src.costs.models import FillSequence, MarketTape


def _ler_csv(caminho: Union[str, Path], colunas) -> pd.DataFrame:
    try:
        df = pd.read_csv(caminho, encoding="utf-8", comment="#")
    except (pd.errors.EmptyDataError, pd.errors.ParserError, UnicodeDecodeError) as e:
        raise BenchmarkError(f"CSV ilegível: {caminho}", details={"erro": str(e)}) from e
    df.columns = [c.strip().lower() for c in df.columns]
    faltando = [c for c in colunas if c not in df.columns]
    if faltando:
        raise BenchmarkError(
            f"Colunas ausentes em {caminho}: {', '.join(faltando)}",
            details={"esperadas": list(colunas), "encontradas": list(df.columns)},
        )
    return df.sort_values("k", kind="stable")


def read_market_tape(caminho: Union[str, Path], open_price: Optional[float] = None,
                     close_price: Optional[float] = None,
                     start_price: Optional[float] = None) -> MarketTape:
    """Lê colunas `k,price,volume`."""
    df = _ler_csv(caminho, ("k", "price", "volume"))
    try:
        return MarketTape(
            k=tuple(df["k"].astype(int).tolist()), prices=tuple(df["price"].astype(float).tolist()),
            volumes=tuple(df["volume"].astype(float).tolist()), open_price=open_price,
            close_price=close_price, start_price=start_price,
        )
    except (ValidationError, ValueError) as e:
        raise BenchmarkError(f"Fita de mercado inválida: {caminho}", details={"erro": str(e)}) from e


def read_fills(caminho: Union[str, Path]) -> FillSequence:
    """Lê colunas `k,shares,price`."""
    df = _ler_csv(caminho, ("k", "shares", "price"))
    try:
        return FillSequence(
            k=tuple(df["k"].astype(int).tolist()), shares=tuple(df["shares"].astype(float).tolist()),
            prices=tuple(df["price"].astype(float).tolist()),
        )
    except (ValidationError, ValueError) as e:
        raise BenchmarkError(f"Execuções inválidas: {caminho}", details={"erro": str(e)}) from e
