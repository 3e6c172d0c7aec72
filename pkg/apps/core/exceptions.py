"""
Exceções compartilhadas pelos apps.

Regras (domain/) levantam a família ValueError.
Serviços levantam a família RuntimeError.
"""


class DomainError(ValueError):
    """Pré-condição violada: forma, letra, par ou hipótese de lema."""


class InvalidDimensionError(DomainError):
    pass


class TableauParseError(DomainError):
    pass


class CoefficientDomainError(DomainError):
    pass


class ConfigError(ValueError):
    pass


class CapExceededError(RuntimeError):
    def __init__(self, message: str, *, count: int, cap: int):
        super().__init__(message)
        self.count = count
        self.cap = cap


class StraighteningError(RuntimeError):
    pass


class SeedingError(RuntimeError):
    pass


class VerificationError(RuntimeError):
    pass
