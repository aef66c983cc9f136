"""Serviços adicionais: exportação e gráficos."""

from .export import ExportService
from .charts import ChartService

__all__ = ["ExportService", "ChartService"]
