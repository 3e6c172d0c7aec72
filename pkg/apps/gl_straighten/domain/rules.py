"""
Regras de normalização de pares de quadros.

Responsabilidade:
- Ordenar colunas com o sinal do determinante
- Transformar pares de arrays de colunas em quadros de forma válida
- Localizar a linha violadora de um par de colunas
- NÃO expandir determinantes
"""

from apps.core.exceptions import DomainError
from apps.core.linalg import permutation_sign
from apps.tableaux.models import Tableau


def sort_column(column) -> tuple[int, tuple]:
    """(sinal, coluna ordenada); sinal 0 se houver repetição."""
    column = tuple(column)
    sign = permutation_sign(column)
    if sign == 0:
        return 0, column
    return sign, tuple(sorted(column))


def normalize_pair(left_columns, right_columns):
    """
    Normaliza um par bruto de listas de colunas.

    Ordena as entradas de cada coluna com sinal, descarta colunas vazias e
    reordena as colunas por comprimento decrescente (ordem estável).
    Retorna (sinal, S, T) ou (0, None, None).
    """
    left_columns = [tuple(c) for c in left_columns]
    right_columns = [tuple(c) for c in right_columns]

    if len(left_columns) != len(right_columns):
        raise DomainError("Número de colunas diferente entre os lados")

    sign = 1
    pairs = []
    for s_col, t_col in zip(left_columns, right_columns):
        if len(s_col) != len(t_col):
            raise DomainError(f"Colunas de comprimentos {len(s_col)} e {len(t_col)}")
        if not s_col:
            continue

        s_sign, s_sorted = sort_column(s_col)
        t_sign, t_sorted = sort_column(t_col)
        sign *= s_sign * t_sign
        if sign == 0:
            return 0, None, None
        pairs.append((s_sorted, t_sorted))

    pairs.sort(key=lambda pair: -len(pair[0]))
    left = Tableau.from_columns([s for s, _ in pairs])
    right = Tableau.from_columns([t for _, t in pairs])
    return sign, left, right


def sort_columns(left: Tableau, right: Tableau):
    """Ordena as colunas de S e T; o sinal é o produto dos sinais das colunas."""
    if left.shape != right.shape:
        raise DomainError(f"Formas diferentes: {left.shape} e {right.shape}")
    return normalize_pair(left.columns, right.columns)


def require_two_columns(left: Tableau, right: Tableau):
    if left.shape != right.shape:
        raise DomainError(f"Formas diferentes: {left.shape} e {right.shape}")
    if len(left.columns) != 2:
        raise DomainError(f"Esperado quadro de duas colunas, forma {left.shape}")

    for column in left.columns + right.columns:
        if any(column[r] >= column[r + 1] for r in range(len(column) - 1)):
            raise DomainError("Colunas devem ser estritamente crescentes")


def violating_row(left: Tableau) -> int | None:
    """Primeira linha t (base 1) com i_t > i′_t num quadro de duas colunas."""
    first, second = left.column(1), left.column(2)
    for t in range(len(second)):
        if first[t] > second[t]:
            return t + 1
    return None


def column_swap(left: Tableau, row: int) -> Tableau:
    """S*: troca ī, i da linha ``row`` por i, ī."""
    first, second = list(left.column(1)), list(left.column(2))
    a, b = first[row - 1], second[row - 1]
    if a.is_zero or b != a.bar() or not a.barred:
        raise DomainError(f"Linha {row} não contém o par ī, i")
    first[row - 1], second[row - 1] = b, a
    return Tableau.from_columns([first, second])
