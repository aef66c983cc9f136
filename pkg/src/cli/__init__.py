"""Interface de linha de comando com Rich."""

from .app import cli

__all__ = ["cli"]
