"""Módulo de persistência com SQLAlchemy (histórico de execuções)."""

from .db import Database, get_db
from .models import RunDB
from .repository import RunRepository

__all__ = ["Database", "get_db", "RunDB", "RunRepository"]
