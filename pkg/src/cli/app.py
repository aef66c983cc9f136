#!/usr/bin/env python3
"""
Interface de linha de comando com Rich.

Comandos: simulate, optimize, frontier, map, benchmark, scenarios, history.
Códigos de saída: 0 sucesso, 1 configuração inválida, 2 erro de execução.
"""

import functools
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

import click
import pandas as pd
from pydantic import ValidationError
from rich import box
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table
from sqlalchemy.exc import SQLAlchemyError

from src import __version__
from src.cli.config import RunConfig, carregar_config
from src.core import Configuracao
from src.core.logging_setup import setup_logging
from src.core.errors import ConfigError, TCAError
from src.core.models import RunRecord, ScenarioSpec, Side
from src.core.scenarios import listar_cenarios
from src.costs.benchmarks import benchmark_price, cost_vs_benchmark
from src.costs.io import read_fills, read_market_tape
from src.costs.models import BenchmarkKind
from src.costs.simulation import simulate_cost_sample
from src.database import RunRepository, get_db
from src.empirics.fitting import fit_gaussian, fit_student_t
from src.empirics.statistics import histogram, moments
from src.empirics.testing import ks_test
from src.optimizer import ExecutionOptimizer, ac_analytic_optimum
from src.optimizer.models import Budget
from src.services.charts import ChartService
from src.services.export import ExportService, colunas_estrategia, linhas_estrategia
from src.utils import formatar_estrategia, formatar_numero, formatar_probabilidade, validar_grade

console = Console()
logger = logging.getLogger(__name__)

SAIDA_CONFIG = 1
SAIDA_EXECUCAO = 2


def tratar_erros(comando):
    """Converte exceções em mensagens e códigos de saída."""

    @functools.wraps(comando)
    def wrapper(*args, **kwargs):
        try:
            return comando(*args, **kwargs)
        except ConfigError as e:
            logger.error("Configuração inválida: %s", e)
            console.print(f"[bold red]❌ Configuração inválida: {escape(str(e))}[/bold red]")
            sys.exit(SAIDA_CONFIG)
        except (TCAError, ValidationError, OSError) as e:
            logger.error("Erro de execução: %s", e, exc_info=True)
            console.print(f"[bold red]❌ Erro: {escape(str(e))}[/bold red]")
            sys.exit(SAIDA_EXECUCAO)

    return wrapper


def opcoes_execucao(comando):
    """Opções compartilhadas pelos comandos que leem um RunConfig."""
    opcoes = [
        click.option('--config', 'config_path', type=click.Path(dir_okay=False),
                     help='Documento JSON de configuração'),
        click.option('--seed', type=int, help='Semente mestre'),
        click.option('--paths', type=int, help='Trajetórias de Monte Carlo'),
        click.option('--candidates', type=int, help='Candidatos quase-aleatórios aceitos'),
        click.option('--degree', type=int, help='Grau da superfície (2 ou 3)'),
        click.option('--out', type=click.Path(file_okay=False), help='Diretório de saída'),
        click.option('--charts/--no-charts', default=False, help='Gerar gráficos PNG'),
    ]
    for opcao in reversed(opcoes):
        comando = opcao(comando)
    return comando


def preparar(processo: Configuracao, config_path: Optional[str], seed: Optional[int],
             paths: Optional[int], candidates: Optional[int], degree: Optional[int],
             out: Optional[str]) -> RunConfig:
    """Lê a configuração e aplica o ambiente e as opções de linha de comando."""
    try:
        config = carregar_config(config_path).com_processo(processo).com_flags(
            seed=seed, paths=paths, candidates=candidates, degree=degree, out=out)
    except ValidationError as e:
        raise ConfigError(str(e), {"erros": e.error_count()}) from e
    # nome de cenário desconhecido ou lista de utilidades vazia: erro de configuração
    if config.cenario is None or not config.utilidades:
        raise ConfigError("configuração sem cenário ou utilidade")
    return config


def proveniencia(config: RunConfig, cenario: ScenarioSpec, budget: Budget) -> Dict[str, Any]:
    return {
        "seed": budget.master_seed,
        "paths": budget.path_count,
        "scenario": cenario.name,
        "fingerprint": cenario.fingerprint(),
        "K": config.order.intervals,
    }


def registrar_execucao(processo: Configuracao, comando: str, master_seed: int,
                       path_count: Optional[int], cenario: str, fingerprint: str,
                       output_dir: str, resumo: Dict[str, Any]) -> Optional[RunRecord]:
    """Grava a execução no histórico; falhas do banco não interrompem o comando."""
    registro = RunRecord(comando=comando, master_seed=master_seed, path_count=path_count,
                         cenario=cenario, fingerprint=fingerprint, output_dir=output_dir,
                         resumo=resumo)
    try:
        db = get_db(processo.database_url)
        with db.session_scope() as session:
            return RunRepository(session).salvar(registro)
    except SQLAlchemyError as e:
        logger.warning("Histórico indisponível (%s): %s", processo.database_url, e)
        return None


def tabela_estrategias(titulo: str, linhas: List[Dict[str, Any]]) -> Table:
    table = Table(title=titulo, box=box.ROUNDED)
    for coluna in linhas[0]:
        table.add_column(coluna, style="cyan" if coluna in ("método", "λ", "c̃") else "white",
                         justify="right")
    for linha in linhas:
        table.add_row(*[str(v) for v in linha.values()])
    return table


def finalizar(exportador: ExportService, resumo: Dict[str, Any]) -> None:
    exportador.exportar_json(resumo)
    console.print(f"\n[green]✅ {len(exportador.arquivos)} arquivos em "
                  f"{exportador.output_dir}[/green]")


@click.group()
@click.version_option(version=__version__)
@click.pass_context
def cli(ctx: click.Context):
    """📉 Laboratório de Custos de Execução - CLI"""
    processo = Configuracao.from_env()
    setup_logging(processo)
    ctx.obj = processo


@cli.command()
@opcoes_execucao
@click.pass_obj
@tratar_erros
def simulate(processo: Configuracao, config_path, seed, paths, candidates, degree, out,
             charts: bool):
    """Simula a distribuição dos custos da estratégia ótima AC."""
    config = preparar(processo, config_path, seed, paths, candidates, degree, out)
    cenario = config.cenario
    order = config.order
    budget = config.orcamento.resolve(order, cenario)
    lam = config.utilidades[0].lam

    with console.status("[bold blue]Calculando estratégia ótima AC..."):
        estrategia = ac_analytic_optimum(order, cenario.params, lam)

    with console.status(f"[bold blue]Simulando {budget.path_count} trajetórias..."):
        amostra = simulate_cost_sample(order, estrategia, cenario, budget.path_count,
                                       budget.master_seed)

    with console.status("[bold blue]Ajustando distribuições..."):
        relatorio = moments(amostra)
        ajustes = [fit_gaussian(amostra), fit_student_t(amostra)]
        testes = [ks_test(amostra, ajuste.dist) for ajuste in ajustes]
        bordas, contagens = histogram(amostra)

    exportador = ExportService(Path(config.output_dir), proveniencia(config, cenario, budget))
    exportador.exportar_csv(pd.DataFrame({"c": amostra.costs}), "costs.csv")
    exportador.exportar_csv(pd.DataFrame({
        "bin_left": bordas[:-1], "bin_right": bordas[1:], "count": contagens,
    }), "hist.csv")
    exportador.exportar_pares(relatorio.as_rows(), "moments.csv", ("statistic", "value"))
    exportador.exportar_csv(pd.DataFrame([{
        "dist": a.dist.kind.value, "mu": a.dist.mu, "sigma": a.dist.sigma,
        "nu": a.dist.nu, "std": a.std, "log_likelihood": a.log_likelihood,
    } for a in ajustes]), "fits.csv")
    exportador.exportar_csv(pd.DataFrame([{
        "dist": a.dist.kind.value, "statistic": t.statistic, "p_value": t.p_value,
        "rejected_1pct": t.rejected_at_1pct,
    } for a, t in zip(ajustes, testes)]), "ks.csv")

    if charts:
        ChartService(Path(config.output_dir)).criar_histograma(amostra.costs, ajustes)

    console.print()
    console.print(Panel(
        f"[bold]{cenario.name}[/bold] · K={order.intervals} · λ={lam:g}\n"
        f"Estratégia: [yellow]{formatar_estrategia(estrategia.shares, 3)}[/yellow]",
        title="📊 Distribuição de custos", border_style="blue"))

    table = Table(box=box.SIMPLE, show_header=False)
    table.add_column("Estatística", style="cyan")
    table.add_column("Valor", justify="right")
    for nome, valor in relatorio.as_rows().items():
        table.add_row(nome, formatar_numero(valor))
    console.print(table)

    ks_table = Table(title="Teste KS", box=box.ROUNDED)
    ks_table.add_column("Ajuste", style="cyan")
    ks_table.add_column("D", justify="right")
    ks_table.add_column("p", justify="right")
    ks_table.add_column("Rejeitado a 1%", justify="center")
    for ajuste, teste in zip(ajustes, testes):
        cor = "red" if teste.rejected_at_1pct else "green"
        ks_table.add_row(ajuste.dist.kind.value, formatar_numero(teste.statistic),
                         formatar_probabilidade(teste.p_value),
                         f"[{cor}]{'sim' if teste.rejected_at_1pct else 'não'}[/{cor}]")
    console.print(ks_table)

    resumo = {
        "comando": "simulate",
        "estrategia": list(estrategia.shares),
        "momentos": relatorio.as_rows(),
        "ks": {a.dist.kind.value: t.model_dump() for a, t in zip(ajustes, testes)},
        "trajetorias_degeneradas": amostra.degenerate_paths,
    }
    finalizar(exportador, resumo)
    registrar_execucao(processo, "simulate", budget.master_seed, budget.path_count,
                       cenario.name, cenario.fingerprint(), config.output_dir, resumo)


@cli.command()
@opcoes_execucao
@click.pass_obj
@tratar_erros
def optimize(processo: Configuracao, config_path, seed, paths, candidates, degree, out,
             charts: bool):
    """Estratégia ótima para cada utilidade configurada."""
    config = preparar(processo, config_path, seed, paths, candidates, degree, out)
    cenario = config.cenario
    order = config.order
    budget = config.orcamento.resolve(order, cenario)
    otimizador = ExecutionOptimizer(config=processo)
    colunas = colunas_estrategia(order.intervals)

    candidatos, superficies, resultados, linhas_tela = [], [], [], []
    for i, spec in enumerate(config.utilidades):
        with console.status(f"[bold blue]Otimizando {spec.kind.value} (λ={spec.lam:g})..."):
            execucao = otimizador.run(spec, order, cenario, budget)

        chave = {"utility": spec.kind.value, "lambda": spec.lam, "c_tilde": spec.c_tilde}
        if execucao.sampling is not None:
            for estrategia, valor in zip(execucao.sampling.strategies, execucao.values):
                candidatos.append({**chave, **dict(zip(colunas, estrategia.shares)),
                                   "U": float(valor)})
        if execucao.surface is not None:
            s = execucao.surface
            for expoentes, coeficiente in zip(s.exponents, s.coefficients):
                superficies.append({**chave, **{f"e_{j + 1}": e for j, e in enumerate(expoentes)},
                                    "coefficient": coeficiente})

        for method, r in execucao.results.items():
            resultados.append({**chave, "method": method.value,
                               **dict(zip(colunas, r.strategy.shares)), "U": r.utility,
                               "expected_cost_term": r.expected_cost_term,
                               "risk_term": r.risk_term})
            linhas_tela.append({"utilidade": spec.kind.value, "λ": f"{spec.lam:g}",
                                "c̃": f"{spec.c_tilde:g}", "método": method.rotulo,
                                "estratégia": formatar_estrategia(r.strategy.shares),
                                "U": formatar_numero(r.utility, 4)})

        if charts and order.intervals == 2 and execucao.sampling is not None:
            ChartService(Path(config.output_dir)).criar_curva_utilidade(
                execucao.sampling.points, execucao.values, execucao.surface,
                list(execucao.results.values()), nome=f"utility_{i + 1}.png")

    exportador = ExportService(Path(config.output_dir), proveniencia(config, cenario, budget))
    exportador.exportar_csv(pd.DataFrame(candidatos), "candidates.csv")
    exportador.exportar_csv(pd.DataFrame(superficies), "surface.csv")
    exportador.exportar_csv(pd.DataFrame(resultados), "result.csv")

    console.print()
    console.print(tabela_estrategias(f"🎯 Estratégias ótimas ({cenario.name})", linhas_tela))

    resumo = {"comando": "optimize", "resultados": resultados, "degree": budget.degree,
              "q_target": budget.q_target}
    finalizar(exportador, resumo)
    registrar_execucao(processo, "optimize", budget.master_seed, budget.path_count,
                       cenario.name, cenario.fingerprint(), config.output_dir,
                       {"resultados": len(resultados)})


@cli.command()
@opcoes_execucao
@click.option('--lambdas', help='Grade de λ separada por vírgulas (ex.: 0,0.5,1)')
@click.pass_obj
@tratar_erros
def frontier(processo: Configuracao, config_path, seed, paths, candidates, degree, out,
             charts: bool, lambdas: Optional[str]):
    """Fronteira eficiente (termo de impacto × termo de risco)."""
    config = preparar(processo, config_path, seed, paths, candidates, degree, out)
    cenario = config.cenario
    order = config.order
    budget = config.orcamento.resolve(order, cenario)
    spec = config.utilidades[0]
    grade = _grade(lambdas, 0.0, 1.0, "λ") or budget.lambda_grid

    with console.status(f"[bold blue]Fronteira {spec.kind.value} em {len(grade)} valores de λ..."):
        pontos = ExecutionOptimizer(config=processo).efficient_frontier(
            spec.kind, order, cenario, grade, budget, c_tilde=spec.c_tilde)

    exportador = ExportService(Path(config.output_dir), proveniencia(config, cenario, budget))
    exportador.exportar_csv(pd.concat([pd.DataFrame({
        "lambda": [p.lam for p in pontos],
        "impact_term": [p.impact_term for p in pontos],
        "risk_term": [p.risk_term for p in pontos],
    }), linhas_estrategia(p.strategy for p in pontos)], axis=1), "frontier.csv")

    if charts:
        ChartService(Path(config.output_dir)).criar_fronteira(pontos)

    console.print()
    console.print(tabela_estrategias(f"📈 Fronteira eficiente ({spec.kind.value})", [
        {"λ": f"{p.lam:g}", "impacto": formatar_numero(p.impact_term, 4),
         "risco": formatar_numero(p.risk_term, 4),
         "estratégia": formatar_estrategia(p.strategy.shares)}
        for p in pontos
    ]))

    finalizar(exportador, {"comando": "frontier", "utility": spec.model_dump(mode="json"),
                           "pontos": len(pontos)})
    registrar_execucao(processo, "frontier", budget.master_seed, budget.path_count,
                       cenario.name, cenario.fingerprint(), config.output_dir,
                       {"pontos": len(pontos), "utility": spec.kind.value})


@cli.command(name="map")
@opcoes_execucao
@click.option('--lambdas', help='Grade de λ separada por vírgulas')
@click.option('--thresholds', help='Grade de c̃ separada por vírgulas')
@click.pass_obj
@tratar_erros
def strategy_map(processo: Configuracao, config_path, seed, paths, candidates, degree, out,
                 charts: bool, lambdas: Optional[str], thresholds: Optional[str]):
    """Mapa de estratégias ótimas na grade λ × c̃."""
    config = preparar(processo, config_path, seed, paths, candidates, degree, out)
    cenario = config.cenario
    order = config.order
    budget = config.orcamento.resolve(order, cenario)
    spec = config.utilidades[0]
    grade_lambda = _grade(lambdas, 0.0, 1.0, "λ") or budget.lambda_grid
    grade_limiar = _grade(thresholds, None, None, "c̃") or budget.c_tilde_grid

    total = len(grade_lambda) * len(grade_limiar)
    with console.status(f"[bold blue]Mapa {spec.kind.value} com {total} células..."):
        celulas = ExecutionOptimizer(config=processo).strategy_map(
            order, cenario, grade_lambda, grade_limiar, budget, kind=spec.kind)

    exportador = ExportService(Path(config.output_dir), proveniencia(config, cenario, budget))
    exportador.exportar_csv(pd.concat([pd.DataFrame({
        "lambda": [c.lam for c in celulas],
        "c_tilde": [c.c_tilde for c in celulas],
    }), linhas_estrategia(c.result.strategy for c in celulas)], axis=1), "map.csv")

    table = Table(title=f"🗺️  Mapa de estratégias ({spec.kind.value})", box=box.ROUNDED)
    table.add_column("λ \\ c̃", style="cyan", justify="right")
    for c_tilde in grade_limiar:
        table.add_column(f"{c_tilde:g}", justify="center")
    por_celula = {(c.lam, c.c_tilde): c for c in celulas}
    for lam in grade_lambda:
        table.add_row(f"{lam:g}", *[
            formatar_estrategia(por_celula[(lam, c_tilde)].result.strategy.shares)
            for c_tilde in grade_limiar
        ])
    console.print()
    console.print(table)

    finalizar(exportador, {"comando": "map", "celulas": total})
    registrar_execucao(processo, "map", budget.master_seed, budget.path_count,
                       cenario.name, cenario.fingerprint(), config.output_dir,
                       {"celulas": total})


@cli.command()
@click.argument('fills', type=click.Path(exists=True, dir_okay=False))
@click.argument('tape', type=click.Path(exists=True, dir_okay=False))
@click.option('--kind', '-k', type=click.Choice([b.value for b in BenchmarkKind]),
              default=BenchmarkKind.IS.value, help='Preço de referência')
@click.option('--side', type=click.Choice([s.value for s in Side]), default=Side.SELL.value,
              help='Lado da ordem')
@click.option('--shares', '-n', type=float, help='Tamanho da ordem N (padrão: Σ execuções)')
@click.option('--participation', type=float, help='Taxa de participação (PWP)')
@click.option('--open-price', type=float, help='Preço de abertura p_O')
@click.option('--close-price', type=float, help='Preço de fechamento p_C')
@click.option('--start-price', type=float, help='Preço inicial p_0 (IS)')
@click.option('--out', type=click.Path(file_okay=False), help='Diretório para benchmark.csv')
@click.pass_obj
@tratar_erros
def benchmark(processo: Configuracao, fills: str, tape: str, kind: str, side: str,
              shares: Optional[float], participation: Optional[float],
              open_price: Optional[float], close_price: Optional[float],
              start_price: Optional[float], out: Optional[str]):
    """Custo de transação de execuções reais contra um benchmark."""
    execucoes = read_fills(fills)
    fita = read_market_tape(tape, open_price=open_price, close_price=close_price,
                            start_price=start_price)
    tipo = BenchmarkKind(kind)
    lado = Side(side)
    N = shares if shares is not None else execucoes.total_shares

    preco = benchmark_price(tipo, fita, participation=participation, total_shares=N)
    custo = cost_vs_benchmark(execucoes, fita, tipo, lado.xi, N, participation=participation)
    medio = execucoes.notional() / execucoes.total_shares

    cor = "green" if custo >= 0 else "red"
    console.print()
    console.print(Panel(
        f"Benchmark [bold]{tipo.value.upper()}[/bold] = {formatar_numero(preco)}\n"
        f"Preço médio de execução = {formatar_numero(medio)}\n"
        f"Custo de transação ({lado.value}) = [bold {cor}]{formatar_numero(custo)}[/bold {cor}]",
        title="💹 Custo de transação", border_style=cor))

    linha = {"kind": tipo.value, "side": lado.value, "total_shares": N,
             "benchmark_price": preco, "average_price": medio, "cost": custo}
    if out:
        exportador = ExportService(Path(out), {"fills": Path(fills).name,
                                               "tape": Path(tape).name})
        exportador.exportar_csv(pd.DataFrame([linha]), "benchmark.csv")
        finalizar(exportador, {"comando": "benchmark", **linha})

    registrar_execucao(processo, "benchmark", 0, None, Path(tape).name, "", out or "", linha)


@cli.command()
def scenarios():
    """Lista os cenários pré-definidos."""
    table = Table(title="🧪 Cenários", box=box.ROUNDED)
    table.add_column("Nome", style="cyan")
    table.add_column("Dinâmica / impacto / retornos", style="white")
    for nome, descricao in listar_cenarios().items():
        table.add_row(nome, descricao)
    console.print()
    console.print(table)


@cli.command()
@click.option('--limit', '-l', default=10, help='Número de registros')
@click.option('--comando', '-c', help='Filtrar por comando')
@click.option('--limpar', is_flag=True, help='Apaga o histórico')
@click.pass_obj
@tratar_erros
def history(processo: Configuracao, limit: int, comando: Optional[str], limpar: bool):
    """Mostra histórico de execuções."""
    db = get_db(processo.database_url)

    if limpar:
        if not click.confirm("Apagar todo o histórico?"):
            return
        with db.session_scope() as session:
            apagados = RunRepository(session).limpar_historico(confirmar=True)
        console.print(f"[green]🗑️  {apagados} registros apagados.[/green]")
        return

    with db.session_scope() as session:
        registros, total = RunRepository(session).listar(limit=limit, comando=comando)

    if not registros:
        console.print("[yellow]📭 Nenhuma execução encontrada.[/yellow]")
        return

    table = Table(title=f"📜 Histórico de Execuções (Total: {total})", box=box.ROUNDED)
    table.add_column("ID", style="dim", justify="right")
    table.add_column("Data", style="cyan")
    table.add_column("Comando", style="green")
    table.add_column("Cenário", style="yellow")
    table.add_column("Semente", justify="right")
    table.add_column("Trajetórias", justify="right")
    table.add_column("Saída", style="blue")

    for r in registros:
        table.add_row(
            str(r.id),
            r.timestamp.strftime("%d/%m/%Y %H:%M") if r.timestamp else "-",
            r.comando,
            r.cenario or "-",
            str(r.master_seed),
            str(r.path_count) if r.path_count is not None else "-",
            r.output_dir or "-",
        )

    console.print()
    console.print(table)


def _grade(texto: Optional[str], minimo: Optional[float], maximo: Optional[float],
           nome: str) -> Optional[List[float]]:
    if texto is None:
        return None
    try:
        return validar_grade(texto, minimo, maximo, nome)
    except ValueError as e:
        raise ConfigError(str(e))


if __name__ == '__main__':
    cli()
