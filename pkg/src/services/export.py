"""Serviço de exportação de resultados."""

import json
import logging
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence

import numpy as np
import pandas as pd

from src.core.models import ExecutionStrategy

logger = logging.getLogger(__name__)

FORMATO_NUMERICO = "%.6g"


def colunas_estrategia(intervals: int) -> List[str]:
    return [f"n_{k}" for k in range(1, intervals + 1)]


def linhas_estrategia(strategies: Iterable[ExecutionStrategy]) -> pd.DataFrame:
    """Uma linha por estratégia, colunas n_1..n_K."""
    estrategias = list(strategies)
    if not estrategias:
        return pd.DataFrame()
    K = estrategias[0].intervals
    return pd.DataFrame([s.shares for s in estrategias], columns=colunas_estrategia(K))


class ExportService:
    """Serviço para exportar tabelas CSV e resumos JSON com proveniência."""

    def __init__(self, output_dir: Path, provenance: Optional[Dict[str, Any]] = None):
        self.output_dir = Path(output_dir)
        self.provenance = provenance or {}
        self.arquivos: List[Path] = []

    def cabecalho(self) -> str:
        """Linha de comentário `# seed=…, paths=…, scenario=…`."""
        campos = ", ".join(f"{k}={v}" for k, v in self.provenance.items())
        return f"# {campos}\n"

    def exportar_csv(self, tabela: pd.DataFrame, nome: str) -> Path:
        """Exporta para CSV (6 algarismos significativos)."""
        arquivo = self.output_dir / nome
        arquivo.parent.mkdir(parents=True, exist_ok=True)

        with open(arquivo, 'w', newline='', encoding='utf-8') as f:
            f.write(self.cabecalho())
            tabela.to_csv(f, index=False, float_format=FORMATO_NUMERICO, lineterminator="\n")

        logger.debug("CSV exportado: %s (%d linhas)", arquivo, len(tabela))
        self.arquivos.append(arquivo)
        return arquivo

    def exportar_json(self, dados: Dict[str, Any], nome: str = "summary.json") -> Path:
        """Exporta para JSON."""
        arquivo = self.output_dir / nome
        arquivo.parent.mkdir(parents=True, exist_ok=True)

        conteudo = {
            "exportado_em": datetime.now().isoformat(),
            "proveniencia": self.provenance,
            **dados,
            "arquivos": [p.name for p in self.arquivos],
        }
        with open(arquivo, 'w', encoding='utf-8') as f:
            json.dump(_serializavel(conteudo), f, indent=2, ensure_ascii=False)

        self.arquivos.append(arquivo)
        return arquivo

    def exportar_pares(self, pares: Dict[str, float], nome: str,
                       colunas: Sequence[str] = ("name", "value")) -> Path:
        """Tabela nome/valor."""
        tabela = pd.DataFrame(list(pares.items()), columns=list(colunas))
        return self.exportar_csv(tabela, nome)


def _serializavel(valor: Any) -> Any:
    if isinstance(valor, dict):
        return {str(k): _serializavel(v) for k, v in valor.items()}
    if isinstance(valor, (list, tuple)):
        return [_serializavel(v) for v in valor]
    if isinstance(valor, np.ndarray):
        return _serializavel(valor.tolist())
    if isinstance(valor, np.generic):
        return valor.item()
    if isinstance(valor, float) and not np.isfinite(valor):
        return None
    if isinstance(valor, Path):
        return str(valor)
    return valor
