# =================================================================
# apps/cli/models.py
# =================================================================
from dataclasses import dataclass, field

from config import settings

from apps.core.domains import parse_domain
from apps.core.exceptions import ConfigError, DomainError
from apps.on_straighten.models import Mode


@dataclass(frozen=True)
class JobConfig:
    """
    Parâmetros de um job da linha de comando.

    Valores ausentes vêm de config.settings. Qualquer valor inválido
    levanta ConfigError (código de saída 2).
    """

    n: int
    mode: Mode = Mode.ON
    coeff: str = field(default_factory=lambda: settings.DEFAULT_COEFF)
    seed: int = field(default_factory=lambda: settings.ORACLE_SEED)
    points: int = 0
    max_terms: int = field(default_factory=lambda: settings.STRAIGHTEN_MAX_TERMS)
    fuel: int = field(default_factory=lambda: settings.STRAIGHTEN_FUEL)
    trace: bool = False

    def __post_init__(self):
        try:
            object.__setattr__(self, "mode", Mode.parse(self.mode))
        except DomainError as exc:
            raise ConfigError(str(exc)) from exc

        try:
            domain = parse_domain(self.coeff)
        except DomainError as exc:
            raise ConfigError(str(exc)) from exc
        object.__setattr__(self, "_domain", domain)

        if self.n < 1:
            raise ConfigError(f"n deve ser positivo, recebido {self.n}")
        if self.mode != Mode.GL and self.n < 3:
            raise ConfigError(
                f"Modo {self.mode.value} exige n ≥ 3, recebido {self.n}"
            )
        if self.points < 0:
            raise ConfigError("Número de pontos não pode ser negativo")
        if self.max_terms < 1 or self.fuel < 1:
            raise ConfigError("Limites de termos e combustível devem ser positivos")

    @property
    def domain(self):
        return self._domain


@dataclass(frozen=True)
class CommandResult:
    """Saída de um comando: texto a imprimir e se a verificação passou."""

    output: str
    ok: bool = True
