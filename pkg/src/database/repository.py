"""Repositório do histórico de execuções."""

import json
from typing import List, Optional, Tuple

from sqlalchemy.orm import Session

from .models import RunDB
from src.core.models import RunRecord


class RunRepository:
    """Repositório para o histórico de execuções."""

    def __init__(self, session: Session):
        self.session = session

    def salvar(self, registro: RunRecord) -> RunRecord:
        """Salva uma execução."""
        db_run = RunDB(
            comando=registro.comando,
            # sementes de 64 bits excedem o INTEGER do SQLite
            master_seed=str(registro.master_seed),
            path_count=registro.path_count,
            cenario=registro.cenario,
            fingerprint=registro.fingerprint,
            output_dir=registro.output_dir,
            resumo=json.dumps(registro.resumo, default=str, ensure_ascii=False),
            timestamp=registro.timestamp,
        )

        self.session.add(db_run)
        self.session.flush()

        return registro.model_copy(update={"id": db_run.id})

    def listar(self, limit: int = 20, comando: Optional[str] = None) -> Tuple[List[RunRecord], int]:
        """Lista execuções, mais recentes primeiro."""
        query = self.session.query(RunDB)

        if comando:
            query = query.filter(RunDB.comando == comando)

        total = query.count()
        query = query.order_by(RunDB.timestamp.desc(), RunDB.id.desc())

        if limit:
            query = query.limit(limit)

        registros = [
            RunRecord(
                id=db_run.id,
                comando=db_run.comando,
                master_seed=int(db_run.master_seed),
                path_count=db_run.path_count,
                cenario=db_run.cenario,
                fingerprint=db_run.fingerprint,
                output_dir=db_run.output_dir,
                resumo=json.loads(db_run.resumo) if db_run.resumo else {},
                timestamp=db_run.timestamp,
            )
            for db_run in query.all()
        ]
        return registros, total

    def limpar_historico(self, confirmar: bool = False) -> int:
        """Limpa todo o histórico."""
        if not confirmar:
            return 0
        return self.session.query(RunDB).delete()
