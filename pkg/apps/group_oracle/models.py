# =================================================================
# apps/group_oracle/models.py
# =================================================================
from dataclasses import dataclass
from enum import Enum

from apps.core.domains import QQ
from apps.core.exceptions import DomainError
from apps.core.linalg import determinant
from apps.tableaux.domain.rules import gl_alphabet


class Component(Enum):
    PLUS = 1
    MINUS = -1


def _matmul(first, second, domain):
    size = len(second)
    return tuple(
        tuple(
            sum((row[k] * second[k][col] for k in range(size)), domain.zero)
            for col in range(len(second[0]))
        )
        for row in first
    )


def _transpose(matrix):
    return tuple(zip(*matrix))


@dataclass(frozen=True)
class FormMatrix:
    """J(i, j) = 1 sse j = ī, nas posições de ℐ."""

    n: int
    domain: object = QQ

    @property
    def entries(self) -> tuple:
        letters = gl_alphabet(self.n)
        partner = {
            letter.position(self.n): letter.bar().position(self.n) for letter in letters
        }
        return tuple(
            tuple(
                self.domain.one if partner[row] == col else self.domain.zero
                for col in range(self.n)
            )
            for row in range(self.n)
        )

    @property
    def is_symmetric(self) -> bool:
        entries = self.entries
        return entries == _transpose(entries)


@dataclass(frozen=True)
class GroupPoint:
    """
    Ponto exato de GO(n): gᵀJg = γJ e det² = γⁿ.

    Pontos de O(n) têm gamma_value = 1. O construtor recusa qualquer
    matriz que não satisfaça as duas identidades.
    """

    n: int
    matrix: tuple
    det_value: object
    gamma_value: object
    domain: object = QQ

    def __post_init__(self):
        convert = self.domain.convert
        matrix = tuple(tuple(convert(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "det_value", self.domain.convert(self.det_value))
        object.__setattr__(self, "gamma_value", self.domain.convert(self.gamma_value))

        if len(matrix) != self.n or any(len(row) != self.n for row in matrix):
            raise DomainError(f"Matriz deve ser {self.n}×{self.n}")
        if self.domain.is_zero(self.gamma_value):
            raise DomainError("γ deve ser invertível")

        form = FormMatrix(self.n, self.domain).entries
        pulled = _matmul(_transpose(matrix), form, self.domain)
        left = _matmul(pulled, matrix, self.domain)
        scaled = tuple(tuple(self.gamma_value * x for x in row) for row in form)
        if left != scaled:
            raise DomainError("Matriz não preserva a forma: gᵀJg ≠ γJ")

        if determinant(matrix, self.domain) != self.det_value:
            raise DomainError("det_value não confere com o determinante da matriz")
        if self.det_value ** 2 != self.gamma_value ** self.n:
            raise DomainError("det² ≠ γⁿ")

    def transpose(self) -> "GroupPoint":
        return GroupPoint(
            self.n,
            _transpose(self.matrix),
            self.det_value,
            self.gamma_value,
            self.domain,
        )

    def __mul__(self, other: "GroupPoint") -> "GroupPoint":
        if self.n != other.n or self.domain != other.domain:
            raise DomainError("Produto de pontos de grupos diferentes")
        return GroupPoint(
            self.n,
            _matmul(self.matrix, other.matrix, self.domain),
            self.det_value * other.det_value,
            self.gamma_value * other.gamma_value,
            self.domain,
        )


@dataclass(frozen=True)
class DegreeListing:
    degree: int
    k: int
    shape_size: int
    count: int


@dataclass(frozen=True)
class BasisReport:
    """Resultado da suíte de base: independência em dois lotes e espalhamento."""

    n: int
    mode: str
    coeff: str
    r_max: int
    count: int
    batch1: int
    batch2: int
    rank: int
    rank_second: int
    spanning_zero: int
    spanning_total: int
    listings: tuple = ()

    @property
    def passed(self) -> bool:
        return (
            self.rank == self.rank_second == self.count
            and self.spanning_zero == self.spanning_total
        )

    def lines(self) -> list[str]:
        lines = [
            f"basis n={self.n} mode={self.mode} coeff={self.coeff} "
            f"degrees=0..{self.r_max} count={self.count}"
        ]
        lines += [
            f"degree {item.degree}: k={item.k} "
            f"shape_size={item.shape_size} count={item.count}"
            for item in self.listings
        ]
        lines += [
            f"points batch1={self.batch1} batch2={self.batch2}",
            f"independence rank={self.rank} expected={self.count}",
            f"spanning residuals_zero={self.spanning_zero}/{self.spanning_total}",
            "PASS" if self.passed else "FAIL",
        ]
        return lines

    def __str__(self) -> str:
        return "\n".join(self.lines())
