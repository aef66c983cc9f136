#!/usr/bin/env python3
"""
Ponto de entrada principal do Laboratório de Custos de Execução.

Uso:
    python main.py simulate --config config.json
    python main.py optimize --seed 7 --paths 10000
    python main.py --help
"""

from src.cli import cli


def main():
    """Função principal."""
    cli()


if __name__ == '__main__':
    main()
