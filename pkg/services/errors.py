# -*- coding: utf-8 -*-
"""
services/errors.py
Exceções do monochrome. Tudo que é violação de pré-condição vira exceção;
resultados "negativos" esperados (NotFound, Timeout, ...) são status dentro dos
dataclasses de resultado de cada módulo.
"""
from typing import Optional


class MonochromeError(Exception):
    """Base de todas as exceções do projeto."""


class SpecMismatch(MonochromeError, ValueError):
    """Operandos de anéis diferentes."""


class InvalidParams(MonochromeError, ValueError):
    """Parâmetros fora do domínio da operação."""


class ParseError(MonochromeError, ValueError):
    """Texto de entrada inválido. Guarda o token problemático para o CLI."""

    def __init__(self, message: str, token: Optional[str] = None):
        super().__init__(message)
        self.token = token

    def __str__(self) -> str:
        base = super().__str__()
        if self.token is not None:
            return f"{base} (token: {self.token!r})"
        return base


class NotDivisible(MonochromeError):
    """b não divide a no anel."""


class BudgetExceeded(MonochromeError):
    """Trabalho estimado acima do teto configurado."""


class PoolExhausted(MonochromeError):
    """Nenhum candidato admissível no pool de extensão UFP."""

    def __init__(self, message: str, step: Optional[int] = None):
        super().__init__(message)
        self.step = step


class CnfModelError(MonochromeError):
    """Modelo SAT inconsistente com a codificação (ALO/AMO) ou com a instância."""


class WitnessError(MonochromeError):
    """Testemunha que não certifica o conjunto declarado."""
