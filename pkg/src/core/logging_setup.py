"""Configuração de logging do laboratório."""

import logging
from pathlib import Path
from typing import Optional

from src.core.models import Configuracao

# Loggers dos módulos são filhos deste (logging.getLogger(__name__)).
LOGGER_RAIZ = "src"


def setup_logging(config: Optional[Configuracao] = None,
                  console_level: int = logging.WARNING) -> logging.Logger:
    """Configura logging: arquivo detalhado em DEBUG e console enxuto."""
    config = config or Configuracao()

    logger = logging.getLogger(LOGGER_RAIZ)
    logger.setLevel(getattr(logging, config.log_level))

    if logger.handlers:
        return logger

    caminho = Path(config.log_file)
    caminho.parent.mkdir(parents=True, exist_ok=True)

    # Handler de arquivo
    file_handler = logging.FileHandler(caminho, encoding='utf-8')
    file_handler.setLevel(logging.DEBUG)
    file_format = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s'
    )
    file_handler.setFormatter(file_format)

    # Handler de console
    console_handler = logging.StreamHandler()
    console_handler.setLevel(console_level)
    console_handler.setFormatter(logging.Formatter('%(levelname)s: %(message)s'))

    logger.addHandler(file_handler)
    logger.addHandler(console_handler)

    logger.debug("Logging configurado (nível %s, arquivo %s)", config.log_level, caminho)
    return logger
