"""
Construções polinomiais: menores, bideterminantes, det e γ.

Os menores são expandidos por cofatores com memoização por chamada
(profundidade, colunas restantes).
"""

from functools import lru_cache

from apps.core.domains import QQ
from apps.core.exceptions import DomainError
from apps.polyring.models import Polynomial
from apps.tableaux.domain.rules import gl_alphabet
from apps.tableaux.models import IndexLetter, Tableau


def constant(value, domain=QQ) -> Polynomial:
    return Polynomial.constant(value, domain)


def variable(row: IndexLetter, col: IndexLetter, domain=QQ) -> Polynomial:
    return Polynomial.variable(row, col, domain)


def minor(rows, cols, domain=QQ) -> Polynomial:
    """Determinante da submatriz de X com linhas ``rows`` e colunas ``cols``."""
    rows, cols = tuple(rows), tuple(cols)
    if len(rows) != len(cols):
        raise DomainError(
            f"Menor exige listas de mesmo tamanho: {len(rows)} e {len(cols)}"
        )

    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        return Polynomial.zero(domain)

    @lru_cache(maxsize=None)
    def expand(depth, remaining):
        if depth == len(rows):
            return Polynomial.constant(1, domain)

        total = Polynomial.zero(domain)
        for position, index in enumerate(remaining):
            rest = remaining[:position] + remaining[position + 1:]
            term = variable(rows[depth], cols[index], domain) * expand(depth + 1, rest)
            total = total - term if position % 2 else total + term
        return total

    return expand(0, tuple(range(len(cols))))


def bideterminant(left: Tableau, right: Tableau, domain=QQ) -> Polynomial:
    """[S:T] = ∏ minor(Sᵢ, Tᵢ) sobre as colunas."""
    if left.shape != right.shape:
        raise DomainError(f"Formas diferentes: {left.shape} e {right.shape}")

    result = Polynomial.constant(1, domain)
    for s_col, t_col in zip(left.columns, right.columns):
        result = result * minor(s_col, t_col, domain)
    return result


def det_poly(n: int, domain=QQ) -> Polynomial:
    letters = gl_alphabet(n)
    return minor(letters, letters, domain)


def gamma_poly(n: int, domain=QQ) -> Polynomial:
    """γ = Σ_{i∈ℐ} X(i,1)X(ī,1̄)."""
    one, one_bar = IndexLetter(1), IndexLetter(1, True)
    total = Polynomial.zero(domain)
    for letter in gl_alphabet(n):
        pair = variable(letter, one, domain) * variable(letter.bar(), one_bar, domain)
        total = total + pair
    return total
