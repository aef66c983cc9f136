"""Configuração do banco de dados SQLAlchemy."""

import os
from contextlib import contextmanager
from pathlib import Path
from typing import Dict, Generator, Optional

from sqlalchemy import create_engine
from sqlalchemy.engine import make_url
from sqlalchemy.orm import Session, declarative_base, sessionmaker

Base = declarative_base()

URL_PADRAO = "sqlite:///data/tca.db"


class Database:
    """Gerenciador de conexão com banco de dados."""

    def __init__(self, database_url: Optional[str] = None):
        self.database_url = database_url or os.getenv("DATABASE_URL", URL_PADRAO)

        url = make_url(self.database_url)
        sqlite = url.get_backend_name() == "sqlite"
        if sqlite and url.database and url.database != ":memory:":
            # Cria diretório do arquivo SQLite se não existir
            Path(url.database).parent.mkdir(parents=True, exist_ok=True)

        self.engine = create_engine(
            self.database_url,
            echo=False,
            connect_args={"check_same_thread": False} if sqlite else {},
        )

        self.SessionLocal = sessionmaker(
            autocommit=False,
            autoflush=False,
            bind=self.engine,
        )

    def criar_tabelas(self):
        """Cria todas as tabelas."""
        from .models import RunDB  # noqa: F401
        Base.metadata.create_all(bind=self.engine)

    @contextmanager
    def session_scope(self) -> Generator[Session, None, None]:
        """Context manager para sessões."""
        session = self.SessionLocal()
        try:
            yield session
            session.commit()
        except Exception:
            session.rollback()
            raise
        finally:
            session.close()

    def close(self):
        """Fecha conexão."""
        self.engine.dispose()


_instancias: Dict[str, Database] = {}


def get_db(database_url: Optional[str] = None) -> Database:
    """Retorna a instância (uma por URL) com as tabelas criadas."""
    url = database_url or os.getenv("DATABASE_URL", URL_PADRAO)
    if url not in _instancias:
        db = Database(url)
        db.criar_tabelas()
        _instancias[url] = db
    return _instancias[url]
