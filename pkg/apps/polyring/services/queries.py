"""Avaliação exata de polinômios e bideterminantes em matrizes."""

from apps.core.domains import QQ
from apps.core.exceptions import DomainError
from apps.core.linalg import determinant
from apps.polyring.models import Polynomial


def _entry(matrix, row, col, n):
    return matrix[row.position(n)][col.position(n)]


def evaluate(poly: Polynomial, matrix, n: int):
    """Substitui X(i,j) ↦ A[pos(i)][pos(j)]."""
    domain = poly.domain
    total = domain.zero
    for monomial, coef in poly.items():
        value = coef
        for var, exp in monomial.powers:
            value = value * _entry(matrix, var.row, var.col, n) ** exp
        total = total + value
    return total


def column_minor_value(rows, cols, matrix, n: int, domain=QQ):
    if len(rows) != len(cols):
        raise DomainError("Menor exige listas de mesmo tamanho")
    if not rows:
        return domain.one
    sub = [[_entry(matrix, r, c, n) for c in cols] for r in rows]
    return determinant(sub, domain)


def evaluate_bideterminant(left, right, matrix, n: int, domain=QQ):
    """Caminho rápido: produto dos determinantes numéricos das colunas."""
    if left.shape != right.shape:
        raise DomainError(f"Formas diferentes: {left.shape} e {right.shape}")

    result = domain.one
    for s_col, t_col in zip(left.columns, right.columns):
        result = result * column_minor_value(s_col, t_col, matrix, n, domain)
        if domain.is_zero(result):
            break
    return result


def format_polynomial(poly: Polynomial) -> str:
    """Uma linha por termo, em ordem graduada-lexicográfica."""
    if poly.is_zero:
        return "0"

    lines = []
    for monomial in sorted(poly.terms, key=lambda m: m.sort_key()):
        coef = poly.domain.format(poly.coefficient(monomial))
        lines.append(f"{coef} * {monomial}" if monomial.powers else coef)
    return "\n".join(lines)
