"""Serviço de gráficos estáticos (PNG)."""

from pathlib import Path
from typing import List, Optional, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from src.empirics.models import FitResult  # noqa: E402
from src.optimizer.models import FrontierPoint, OptResult  # noqa: E402
from src.optimizer.surface import PolySurface  # noqa: E402
from src.stochastic.distributions import pdf  # noqa: E402


class ChartService:
    """Serviço para criar gráficos."""

    def __init__(self, output_dir: Path):
        self.output_dir = Path(output_dir)

    def _salvar(self, fig, nome: str) -> Path:
        arquivo = self.output_dir / nome
        arquivo.parent.mkdir(parents=True, exist_ok=True)
        fig.tight_layout()
        fig.savefig(arquivo, dpi=150, bbox_inches='tight')
        plt.close(fig)
        return arquivo

    def criar_histograma(self, custos: np.ndarray, ajustes: Sequence[FitResult],
                         nome: str = "hist.png") -> Path:
        """
        Histograma dos custos com as densidades ajustadas.

        Args:
            custos: Amostra de custos por ação
            ajustes: Distribuições ajustadas a sobrepor
            nome: Nome do arquivo PNG
        """
        if len(custos) == 0:
            raise ValueError("Nenhum custo fornecido")

        fig, ax = plt.subplots(figsize=(10, 6))
        ax.hist(custos, bins="fd", density=True, alpha=0.5, color='#366092',
                edgecolor='black', linewidth=0.3, label='Amostra')

        x = np.linspace(np.min(custos), np.max(custos), 400)
        for ajuste, cor in zip(ajustes, ['r', 'g', 'm']):
            ax.plot(x, pdf(ajuste.dist, x), color=cor, linewidth=2,
                    label=f'{ajuste.dist.kind.value} (σ={ajuste.dist.sigma:.3g})')

        ax.set_xlabel('Custo de transação c', fontsize=12)
        ax.set_ylabel('Densidade', fontsize=12)
        ax.set_title('Distribuição dos custos de transação', fontsize=14, fontweight='bold')
        ax.grid(True, alpha=0.3)
        ax.legend()
        return self._salvar(fig, nome)

    def criar_curva_utilidade(self, pontos: np.ndarray, valores: np.ndarray,
                              superficie: Optional[PolySurface],
                              resultados: List[OptResult],
                              nome: str = "utility.png") -> Path:
        """Utilidade dos candidatos em função de n_1 (K = 2)."""
        fig, ax = plt.subplots(figsize=(10, 6))
        n1 = np.asarray(pontos)[:, 0]
        ax.scatter(n1, valores, s=12, color='#366092', alpha=0.7, label='Candidatos')

        if superficie is not None:
            grade = np.linspace(superficie.lower[0], superficie.upper[0], 300)
            ax.plot(grade, superficie.evaluate(grade), 'r-', linewidth=2,
                    label=f'Ajuste grau {superficie.degree}')

        for r in resultados:
            ax.axvline(r.strategy.shares[0], linestyle='--', alpha=0.6,
                       label=f'{r.method.rotulo}: n_1={r.strategy.shares[0]:.3f}')

        ax.set_xlabel('n_1', fontsize=12)
        ax.set_ylabel('U', fontsize=12)
        ax.set_title('Função utilidade', fontsize=14, fontweight='bold')
        ax.grid(True, alpha=0.3)
        ax.legend()
        return self._salvar(fig, nome)

    def criar_fronteira(self, pontos: Sequence[FrontierPoint], nome: str = "frontier.png") -> Path:
        """Termo de impacto contra termo de risco ao longo de λ."""
        if not pontos:
            raise ValueError("Nenhum ponto de fronteira fornecido")

        fig, ax = plt.subplots(figsize=(10, 6))
        risco = [p.risk_term for p in pontos]
        impacto = [p.impact_term for p in pontos]
        ax.plot(risco, impacto, marker='o', linewidth=2, markersize=6, color='#366092')
        for p in pontos:
            ax.annotate(f'λ={p.lam:g}', (p.risk_term, p.impact_term), fontsize=8,
                        xytext=(4, 4), textcoords='offset points')

        ax.set_xlabel('Termo de risco', fontsize=12)
        ax.set_ylabel('Termo de impacto (−E[c])', fontsize=12)
        ax.set_title('Fronteira eficiente de execução', fontsize=14, fontweight='bold')
        ax.grid(True, alpha=0.3)
        return self._salvar(fig, nome)
