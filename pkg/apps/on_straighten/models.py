# =================================================================
# apps/on_straighten/models.py
# =================================================================
from dataclasses import dataclass, field
from enum import Enum

from apps.core.domains import QQ
from apps.core.exceptions import DomainError
from apps.gl_straighten.domain.rules import normalize_pair
from apps.gl_straighten.models import Combination, TraceStep
from apps.tableaux.models import Tableau

__all__ = [
    "ColumnComplement",
    "Mode",
    "RelationSpec",
    "SdExpansion",
    "SdTerm",
    "TraceStep",
]


class Mode(str, Enum):
    GL = "gl"
    ON = "on"
    GO = "go"

    @classmethod
    def parse(cls, value) -> "Mode":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError as exc:
            raise DomainError(f"Modo desconhecido: {value!r}") from exc


@dataclass(frozen=True)
class RelationSpec:
    """
    Dados de uma soma de relação.

    ``s0_columns``: as duas colunas de S₀ (podem ser vazias ou irregulares).
    ``right``: T de duas colunas; ``a`` pares (i, ī) são empilhados sobre S₀.
    ``excluded``: o conjunto C, com |C| < a.
    """

    s0_columns: tuple
    right: Tableau
    a: int
    excluded: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        s0 = tuple(tuple(column) for column in self.s0_columns)
        if len(s0) != 2:
            raise DomainError("S₀ deve ter exatamente duas colunas (talvez vazias)")
        object.__setattr__(self, "s0_columns", s0)
        object.__setattr__(self, "excluded", frozenset(self.excluded))

        columns = self.right.columns
        if len(columns) != 2:
            raise DomainError("T deve ter duas colunas")
        if not len(self.excluded) < self.a <= len(columns[1]):
            raise DomainError(
                f"Exige |C| < a ≤ |T₂|: |C|={len(self.excluded)}, a={self.a}, "
                f"|T₂|={len(columns[1])}"
            )
        for s_col, t_col in zip(s0, columns):
            if len(s_col) + self.a != len(t_col):
                raise DomainError(
                    "Colunas empilhadas não têm o comprimento das colunas de T"
                )


@dataclass(frozen=True)
class SdTerm:
    """Termo de 𝒮_d: sinal · [colunas à esquerda : (T,E)]."""

    d: int
    sign: int
    left_columns: tuple
    right: Tableau


@dataclass(frozen=True)
class SdExpansion:
    spec: RelationSpec
    terms: tuple = ()

    def by_degree(self, d: int) -> tuple:
        return tuple(term for term in self.terms if term.d == d)

    def to_combination(self, domain=QQ, mode=None) -> Combination:
        """Σ_d γ^d 𝒮_d no modo GO; Σ_d 𝒮_d caso contrário."""
        graded = mode == Mode.GO
        combination = Combination(domain)

        for term in self.terms:
            right_columns = list(term.right.columns)
            right_columns += [()] * (2 - len(right_columns))
            sign, left, right = normalize_pair(term.left_columns, right_columns)
            if sign:
                gamma_pow = term.d if graded else 0
                combination.add_term(term.sign * sign, left, right, gamma_pow)
        return combination


@dataclass(frozen=True)
class ColumnComplement:
    """[S:T] = sign · det · [left:right] em O(n); left, right são S̄′ e T̄′."""

    sign: int
    left: Tableau
    right: Tableau
