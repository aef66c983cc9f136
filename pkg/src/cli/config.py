"""Configuração de uma execução da linha de comando (documento JSON)."""

import json
import logging
from pathlib import Path
from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from src.core.errors import ConfigError
from src.core.models import Configuracao, OrderSpec, ScenarioSpec, UtilitySpec
from src.core.scenarios import get_scenario
from src.optimizer.models import Budget

logger = logging.getLogger(__name__)


class RunConfig(BaseModel):
    """
    Documento de configuração de um comando.

    Chaves aceitas: order, scenario, utility, budget, output_dir, master_seed.
    Qualquer outra chave é rejeitada antes de qualquer cálculo.
    """
    model_config = ConfigDict(frozen=True, extra="forbid")

    order: OrderSpec = Field(default_factory=lambda: OrderSpec.uniforme(2))
    scenario: Union[str, ScenarioSpec] = "scenario1"
    utility: Union[UtilitySpec, List[UtilitySpec]] = Field(default_factory=UtilitySpec)
    budget: Budget = Field(default_factory=Budget)
    output_dir: str = "resultados"
    master_seed: Optional[int] = Field(None, ge=0, lt=2 ** 64)

    @property
    def cenario(self) -> ScenarioSpec:
        """Cenário resolvido (nome de cenário pré-definido ou objeto completo)."""
        if isinstance(self.scenario, ScenarioSpec):
            return self.scenario
        return get_scenario(self.scenario)

    @property
    def utilidades(self) -> List[UtilitySpec]:
        if isinstance(self.utility, list):
            if not self.utility:
                raise ConfigError("lista de utilidades vazia")
            return list(self.utility)
        return [self.utility]

    @property
    def seed(self) -> int:
        """Semente mestre efetiva: a da raiz tem precedência sobre a do orçamento."""
        return self.master_seed if self.master_seed is not None else self.budget.master_seed

    @property
    def orcamento(self) -> Budget:
        """Orçamento com a semente efetiva."""
        return self.budget.model_copy(update={"master_seed": self.seed})

    def com_processo(self, processo: Configuracao) -> "RunConfig":
        """Semente e workers do ambiente onde o orçamento não os define."""
        definidos = self.budget.model_fields_set
        atualizacao = {}
        if "master_seed" not in definidos:
            atualizacao["master_seed"] = processo.default_seed
        if "workers" not in definidos:
            atualizacao["workers"] = processo.workers
        return self.model_copy(update={"budget": self.budget.model_copy(update=atualizacao)})

    def com_flags(self, seed: Optional[int] = None, paths: Optional[int] = None,
                  candidates: Optional[int] = None, degree: Optional[int] = None,
                  out: Optional[str] = None) -> "RunConfig":
        """Cópia revalidada com as opções de linha de comando aplicadas."""
        orcamento = self.budget.model_dump()
        if paths is not None:
            orcamento["path_count"] = paths
        if candidates is not None:
            orcamento["q_target"] = candidates
        if degree is not None:
            orcamento["degree"] = degree

        dados = {
            "order": self.order,
            "scenario": self.scenario,
            "utility": self.utility,
            "budget": Budget.model_validate(orcamento),
            "output_dir": out if out is not None else self.output_dir,
            "master_seed": seed if seed is not None else self.master_seed,
        }
        return RunConfig.model_validate(dados)


def carregar_config(caminho: Optional[Union[str, Path]] = None) -> RunConfig:
    """
    Lê e valida um documento de configuração.

    Raises:
        ConfigError: Arquivo ausente ou JSON malformado
        pydantic.ValidationError: Chaves desconhecidas ou valores inválidos
    """
    if caminho is None:
        return RunConfig()

    caminho = Path(caminho)
    try:
        texto = caminho.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"Não foi possível ler {caminho}: {e}")

    try:
        dados = json.loads(texto)
    except json.JSONDecodeError as e:
        raise ConfigError(f"JSON inválido em {caminho}: {e}", {"linha": e.lineno})

    if not isinstance(dados, dict):
        raise ConfigError(f"{caminho}: o documento deve ser um objeto JSON")

    logger.debug("Configuração lida de %s: chaves %s", caminho, sorted(dados))
    return RunConfig.model_validate(dados)
