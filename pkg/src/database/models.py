"""Modelos ORM do banco de dados."""

from datetime import datetime

from sqlalchemy import Column, DateTime, Index, Integer, String, Text

from .db import Base


class RunDB(Base):
    """Execução registrada no histórico."""

    __tablename__ = "execucoes"

    id = Column(Integer, primary_key=True, index=True)
    comando = Column(String(20), nullable=False, index=True)
    master_seed = Column(String(20), nullable=False)
    path_count = Column(Integer, nullable=True)
    cenario = Column(String(100), nullable=False, default="")
    fingerprint = Column(String(32), nullable=False, default="")
    output_dir = Column(Text, nullable=False, default="")
    resumo = Column(Text, nullable=True)
    timestamp = Column(DateTime, default=datetime.now, index=True)

    __table_args__ = (
        Index('idx_comando_timestamp', 'comando', 'timestamp'),
    )

