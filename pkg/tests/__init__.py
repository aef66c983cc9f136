"""Testes do Laboratório de Custos de Execução."""
