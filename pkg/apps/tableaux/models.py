# =================================================================
# apps/tableaux/models.py
# =================================================================
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

from apps.core.exceptions import DomainError


@dataclass(frozen=True, order=True)
class IndexLetter:
    """
    Letra do alfabeto ordenado ℐ: 1̄ < 1 < 2̄ < 2 < ... < m̄ < m (< 0).

    ``index`` = k (0 para a letra zero), ``barred`` marca k̄.
    Igualdade, hash e ordem usam apenas ``key``.
    """

    key: tuple = field(init=False, repr=False)
    index: int = field(compare=False)
    barred: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.index < 0:
            raise DomainError(f"Índice de letra inválido: {self.index}")
        if self.index == 0 and self.barred:
            object.__setattr__(self, "barred", False)

        if self.index == 0:
            key = (1, 0)
        else:
            key = (0, 2 * self.index - 1 if self.barred else 2 * self.index)
        object.__setattr__(self, "key", key)

    @property
    def is_zero(self) -> bool:
        return self.index == 0

    @property
    def label(self) -> str:
        if self.barred:
            return f"{self.index}b"
        return str(self.index)

    def bar(self) -> "IndexLetter":
        if self.is_zero:
            return self
        return IndexLetter(self.index, not self.barred)

    def position(self, n: int) -> int:
        """Posição (base 0) da letra em ℐ(n)."""
        if self.is_zero:
            return n - 1
        return 2 * self.index - 2 if self.barred else 2 * self.index - 1

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(part) for part in self.parts)
        if any(part <= 0 for part in parts):
            raise DomainError(f"Partição com parte não positiva: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"Partição não decrescente: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def rows(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(
            sum(1 for part in self.parts if part >= i)
            for i in range(1, self.parts[0] + 1)
        ))

    def __str__(self) -> str:
        return "(" + ",".join(str(part) for part in self.parts) + ")"


@dataclass(frozen=True)
class Tableau:
    """
    Quadro de Young preenchido, guardado por linhas.

    ``entry(i, j)`` e ``column(j)`` são base 1; ``entry`` devolve None
    fora do diagrama.
    """

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        if any(not row for row in rows):
            raise DomainError("Linha vazia em quadro")
        if any(len(rows[i]) < len(rows[i + 1]) for i in range(len(rows) - 1)):
            raise DomainError("Forma irregular: comprimentos de linha devem decrescer")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_columns(cls, columns) -> "Tableau":
        columns = [tuple(column) for column in columns]
        if any(not column for column in columns):
            raise DomainError("Coluna vazia em quadro")
        if any(len(columns[i]) < len(columns[i + 1]) for i in range(len(columns) - 1)):
            raise DomainError("Colunas fora de ordem de comprimento")

        height = len(columns[0]) if columns else 0
        return cls(tuple(
            tuple(column[r] for column in columns if len(column) > r)
            for r in range(height)
        ))

    @classmethod
    def empty(cls) -> "Tableau":
        return cls(())

    @cached_property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    @cached_property
    def columns(self) -> tuple:
        if not self.rows:
            return ()
        return tuple(
            tuple(row[j] for row in self.rows if len(row) > j)
            for j in range(len(self.rows[0]))
        )

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def entry(self, i: int, j: int):
        if i < 1 or i > len(self.rows):
            return None
        row = self.rows[i - 1]
        if j < 1 or j > len(row):
            return None
        return row[j - 1]

    def column(self, j: int) -> tuple:
        if j < 1 or j > len(self.columns):
            return ()
        return self.columns[j - 1]

    def letters(self):
        for row in self.rows:
            yield from row


class Ordering(Enum):
    LT = -1
    EQ = 0
    GT = 1


class ViolationKind(str, Enum):
    GL = "GL"
    COLSUM = "COLSUM"
    OS1 = "OS1"
    OS2 = "OS2"
    OS3 = "OS3"


KIND_PRIORITY = {
    ViolationKind.GL: 0,
    ViolationKind.COLSUM: 1,
    ViolationKind.OS1: 2,
    ViolationKind.OS2: 3,
    ViolationKind.OS3: 4,
}


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    index: int
    cells: tuple = ()
    column: int | None = None


@dataclass(frozen=True)
class ONStandardReport:
    standard: bool
    gl_standard: bool
    violations: tuple
    alpha: tuple
    beta: tuple

    @property
    def primary(self) -> Violation | None:
        """Violação a corrigir primeiro: GL, COLSUM, depois menor índice."""
        if not self.violations:
            return None
        return min(
            self.violations,
            key=lambda v: (
                v.kind not in (ViolationKind.GL, ViolationKind.COLSUM),
                v.index,
                KIND_PRIORITY[v.kind],
                v.column or 0,
            ),
        )
