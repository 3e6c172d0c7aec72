"""Enumeração de partições e quadros (sempre em ordem determinística)."""

from itertools import combinations, product

from apps.tableaux.domain.rules import (
    gl_alphabet,
    is_column_strict,
    on_standard_report,
    prec_key,
    satisfies_column_condition,
    shape_sort_key,
)
from apps.tableaux.models import Partition, Tableau


def partitions_of(size: int, max_rows: int | None = None) -> list[Partition]:
    """Todas as partições de ``size``, na ordem total de formas."""
    found = []

    def walk(remaining, largest, parts):
        if remaining == 0:
            found.append(Partition(tuple(parts)))
            return
        if max_rows is not None and len(parts) == max_rows:
            return
        for part in range(min(remaining, largest), 0, -1):
            walk(remaining - part, part, parts + [part])

    walk(size, size, [])
    return sorted(found, key=shape_sort_key)


def partitions_up_to(size: int, max_rows: int | None = None) -> list[Partition]:
    shapes = []
    for r in range(size + 1):
        shapes.extend(partitions_of(r, max_rows))
    return shapes


def _sorted_tableaux(candidates):
    return sorted(candidates, key=prec_key)


def enumerate_column_strict(shape: Partition, letters) -> list[Tableau]:
    """Força bruta: todas as colunas estritamente crescentes, combinadas."""
    if not shape.parts:
        return [Tableau.empty()]

    letters = sorted(letters)
    per_column = [
        list(combinations(letters, length)) for length in shape.conjugate().parts
    ]
    return _sorted_tableaux(Tableau.from_columns(cols) for cols in product(*per_column))


def enumerate_gl_standard(shape: Partition, letters) -> list[Tableau]:
    """Quadros GL-padrão, construídos coluna a coluna com poda por linha."""
    if not shape.parts:
        return [Tableau.empty()]

    letters = sorted(letters)
    lengths = shape.conjugate().parts
    found = []

    def extend(columns):
        if len(columns) == len(lengths):
            found.append(Tableau.from_columns(columns))
            return
        length = lengths[len(columns)]
        previous = columns[-1] if columns else None
        for candidate in combinations(letters, length):
            if previous and any(previous[r] > candidate[r] for r in range(length)):
                continue
            extend(columns + [candidate])

    extend([])
    return _sorted_tableaux(found)


def enumerate_on_standard(shape: Partition, n: int):
    """
    Quadros O(n)-padrão de forma ``shape``, em ordem ≺.

    Forma que viola λ′₁+λ′₂ ≤ n devolve fluxo vazio.
    """
    if not satisfies_column_condition(shape, n) or shape.rows > n:
        return iter(())

    candidates = enumerate_gl_standard(shape, gl_alphabet(n))
    return (t for t in candidates if on_standard_report(t, n).standard)


def brute_force_on_standard(shape: Partition, n: int) -> list[Tableau]:
    """Oráculo de teste: filtra todos os quadros de colunas estritas."""
    if shape.rows > n:
        return []
    return [
        t for t in enumerate_column_strict(shape, gl_alphabet(n))
        if is_column_strict(t) and on_standard_report(t, n).standard
    ]
