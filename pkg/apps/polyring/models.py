# =================================================================
# apps/polyring/models.py
# =================================================================
from dataclasses import dataclass

from apps.core.domains import QQ, ensure_same_domain
from apps.core.exceptions import DomainError
from apps.tableaux.models import IndexLetter


@dataclass(frozen=True, order=True)
class Variable:
    """Indeterminada X(i,j), ordenada por i e depois por j em ℐ."""

    row: IndexLetter
    col: IndexLetter

    def __str__(self) -> str:
        return f"X({self.row},{self.col})"


@dataclass(frozen=True)
class Monomial:
    """Produto de variáveis com expoentes positivos, em ordem canônica."""

    powers: tuple = ()

    def __post_init__(self):
        merged = {}
        for var, exp in self.powers:
            if exp < 0:
                raise DomainError(f"Expoente negativo em {var}")
            merged[var] = merged.get(var, 0) + exp
        powers = tuple(sorted((v, e) for v, e in merged.items() if e))
        object.__setattr__(self, "powers", powers)

    @property
    def degree(self) -> int:
        return sum(exp for _, exp in self.powers)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.powers + other.powers)

    def sort_key(self) -> tuple:
        # graduada, depois lexicográfica nas variáveis
        return (-self.degree, tuple((v.row.key, v.col.key, -e) for v, e in self.powers))

    def __str__(self) -> str:
        parts = []
        for var, exp in self.powers:
            parts.append(str(var) if exp == 1 else f"{var}^{exp}")
        return " * ".join(parts)


ONE_MONOMIAL = Monomial()


class Polynomial:
    """
    Polinômio esparso imutável nas variáveis X(i,j).

    Nunca guarda coeficiente zero; igualdade é estrutural.
    """

    __slots__ = ("_terms", "domain")

    def __init__(self, terms=None, domain=QQ):
        cleaned = {}
        for monomial, coef in (terms or {}).items():
            value = domain.convert(coef)
            if not domain.is_zero(value):
                cleaned[monomial] = value
        object.__setattr__(self, "_terms", cleaned)
        object.__setattr__(self, "domain", domain)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial é imutável")

    @classmethod
    def zero(cls, domain=QQ) -> "Polynomial":
        return cls({}, domain)

    @classmethod
    def constant(cls, value, domain=QQ) -> "Polynomial":
        return cls({ONE_MONOMIAL: value}, domain)

    @classmethod
    def variable(cls, row: IndexLetter, col: IndexLetter, domain=QQ) -> "Polynomial":
        return cls({Monomial(((Variable(row, col), 1),)): domain.one}, domain)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, monomial: Monomial):
        return self._terms.get(monomial, self.domain.zero)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(m.degree for m in self._terms)

    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self._terms}) <= 1

    def __len__(self) -> int:
        return len(self._terms)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            ensure_same_domain(self.domain, other.domain)
            return other
        return Polynomial.constant(other, self.domain)

    def __add__(self, other):
        other = self._coerce(other)
        merged = dict(self._terms)
        for monomial, coef in other._terms.items():
            merged[monomial] = merged.get(monomial, self.domain.zero) + coef
        return Polynomial(merged, self.domain)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: -c for m, c in self._terms.items()}, self.domain)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            scalar = self.domain.convert(other)
            scaled = {m: c * scalar for m, c in self._terms.items()}
            return Polynomial(scaled, self.domain)

        ensure_same_domain(self.domain, other.domain)
        product = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                key = m1 * m2
                product[key] = product.get(key, self.domain.zero) + c1 * c2
        return Polynomial(product, self.domain)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise DomainError("Expoente negativo")
        result = Polynomial.constant(1, self.domain)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.domain == other.domain and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.domain.name, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"<Polynomial {len(self._terms)} termos sobre {self.domain.name}>"
