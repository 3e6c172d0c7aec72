# =================================================================
# apps/gl_straighten/models.py
# =================================================================
from dataclasses import dataclass

from apps.core.domains import QQ, ensure_same_domain
from apps.core.exceptions import DomainError
from apps.tableaux.domain.rules import prec_key, shape_sort_key
from apps.tableaux.models import Tableau


@dataclass(frozen=True)
class BidetTerm:
    """coef · γ^gamma_pow · [left:right]."""

    coef: object
    gamma_pow: int
    left: Tableau
    right: Tableau

    def __post_init__(self):
        if not self.coef:
            raise DomainError("Termo com coeficiente zero")
        if self.gamma_pow < 0:
            raise DomainError(f"Expoente de γ negativo: {self.gamma_pow}")
        if self.left.shape != self.right.shape:
            raise DomainError(
                f"Formas diferentes: {self.left.shape} e {self.right.shape}"
            )

    @property
    def key(self) -> tuple:
        return (self.gamma_pow, self.left, self.right)

    @property
    def shape(self):
        return self.left.shape

    @property
    def graded_degree(self) -> int:
        return 2 * self.gamma_pow + self.left.size


def certificate_key(key: tuple) -> tuple:
    gamma_pow, left, right = key
    return (shape_sort_key(left.shape), prec_key(left), prec_key(right), gamma_pow)


class Combination:
    """
    Combinação linear de bideterminantes, mesclada a cada inserção.

    Chave (gamma_pow, left, right); coeficientes zero nunca ficam guardados.
    Iteração em ordem de certificado.
    """

    def __init__(self, domain=QQ, terms=()):
        self.domain = domain
        self._terms = {}
        for term in terms:
            self.add_term(term.coef, term.left, term.right, term.gamma_pow)

    @classmethod
    def single(
        cls, left: Tableau, right: Tableau, coef=1, gamma_pow: int = 0, domain=QQ
    ):
        return cls(domain).add_term(coef, left, right, gamma_pow)

    def add_term(
        self, coef, left: Tableau, right: Tableau, gamma_pow: int = 0
    ) -> "Combination":
        if left.shape != right.shape:
            raise DomainError(f"Formas diferentes: {left.shape} e {right.shape}")

        key = (gamma_pow, left, right)
        value = self._terms.get(key, self.domain.zero) + self.domain.convert(coef)
        if self.domain.is_zero(value):
            self._terms.pop(key, None)
        else:
            self._terms[key] = value
        return self

    def add(self, other: "Combination", scale=1, gamma_shift: int = 0) -> "Combination":
        ensure_same_domain(self.domain, other.domain)
        factor = self.domain.convert(scale)
        for (gamma_pow, left, right), coef in other._terms.items():
            self.add_term(coef * factor, left, right, gamma_pow + gamma_shift)
        return self

    def copy(self) -> "Combination":
        clone = Combination(self.domain)
        clone._terms = dict(self._terms)
        return clone

    def scaled(self, factor) -> "Combination":
        return Combination(self.domain).add(self, factor)

    def shifted(self, gamma_shift: int) -> "Combination":
        return Combination(self.domain).add(self, 1, gamma_shift)

    def coefficient(self, left: Tableau, right: Tableau, gamma_pow: int = 0):
        return self._terms.get((gamma_pow, left, right), self.domain.zero)

    def keys(self):
        return self._terms.keys()

    def items(self):
        return self._terms.items()

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def of_shape(self, shape) -> "Combination":
        part = Combination(self.domain)
        for (gamma_pow, left, right), coef in self._terms.items():
            if left.shape == shape:
                part.add_term(coef, left, right, gamma_pow)
        return part

    def __iter__(self):
        for key in sorted(self._terms, key=certificate_key):
            gamma_pow, left, right = key
            yield BidetTerm(self._terms[key], gamma_pow, left, right)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "Combination") -> "Combination":
        return self.copy().add(other)

    def __sub__(self, other: "Combination") -> "Combination":
        return self.copy().add(other, -1)

    def __neg__(self) -> "Combination":
        return self.scaled(-1)

    def __eq__(self, other):
        if not isinstance(other, Combination):
            return NotImplemented
        return self.domain == other.domain and self._terms == other._terms

    __hash__ = None

    def __repr__(self) -> str:
        return f"<Combination {len(self._terms)} termos sobre {self.domain.name}>"


@dataclass(frozen=True)
class TraceStep:
    """Um passo de reescrita: tipo, testemunha j, termos vivos antes/depois."""

    kind: str
    witness: int
    before: int
    after: int

    def __str__(self) -> str:
        return f"{self.kind}\tj={self.witness}\tterms {self.before}->{self.after}"
