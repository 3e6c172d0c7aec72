"""
Álgebra linear exata.

Determinante e solução por eliminação sobre corpo (ℚ ou 𝔽_p). Posto sobre
ℚ calculado módulo um primo grande, com Bareiss livre de frações sobre
inteiros quando o posto modular não é cheio; posto sobre 𝔽_p por Gauss.
"""

import math
from fractions import Fraction

import sympy as sp

RANK_PRIME = int(sp.nextprime(2**61))


def permutation_sign(sequence) -> int:
    """
    Sinal da permutação que ordena ``sequence``.

    Retorna 0 se houver repetição.
    """
    items = list(sequence)
    if len(set(items)) != len(items):
        return 0

    inversions = 0
    for index, item in enumerate(items):
        for other in items[index + 1:]:
            if other < item:
                inversions += 1

    return -1 if inversions % 2 else 1


def placement_sign(positions, length: int) -> int:
    """
    Sinal da permutação s ↦ positions[s] (s < len(positions)),
    completada pelas posições restantes em ordem crescente.
    """
    chosen = list(positions)
    rest = [index for index in range(length) if index not in chosen]
    return permutation_sign(chosen + rest)


def determinant(matrix, domain):
    """Determinante por eliminação gaussiana com pivoteamento de linha."""
    size = len(matrix)
    if size == 0:
        return domain.one

    rows = [list(row) for row in matrix]
    result = domain.one

    for col in range(size):
        pivot = next(
            (r for r in range(col, size) if not domain.is_zero(rows[r][col])), None
        )
        if pivot is None:
            return domain.zero

        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            result = -result

        head = rows[col][col]
        result = result * head

        for r in range(col + 1, size):
            factor = rows[r][col]
            if domain.is_zero(factor):
                continue
            ratio = factor / head
            for c in range(col + 1, size):
                rows[r][c] = rows[r][c] - ratio * rows[col][c]

    return result


def solve(matrix, rhs, domain):
    """
    Resolve matrix · X = rhs (ambos quadrados ou rhs com várias colunas)
    por Gauss-Jordan. Retorna None se a matriz for singular.
    """
    size = len(matrix)
    width = len(rhs[0])
    rows = [list(matrix[r]) + list(rhs[r]) for r in range(size)]

    for col in range(size):
        pivot = next(
            (r for r in range(col, size) if not domain.is_zero(rows[r][col])), None
        )
        if pivot is None:
            return None
        rows[col], rows[pivot] = rows[pivot], rows[col]

        head = rows[col][col]
        rows[col] = [value / head for value in rows[col]]

        for r in range(size):
            if r == col or domain.is_zero(rows[r][col]):
                continue
            factor = rows[r][col]
            rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]

    return [row[size:size + width] for row in rows]


def _bareiss_rank(rows) -> int:
    matrix = [list(row) for row in rows]
    if not matrix:
        return 0

    height, width = len(matrix), len(matrix[0])
    rank = 0
    previous = 1

    for col in range(width):
        pivot = next((r for r in range(rank, height) if matrix[r][col] != 0), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]

        head = matrix[rank][col]
        for r in range(rank + 1, height):
            lead = matrix[r][col]
            for c in range(col + 1, width):
                value = head * matrix[r][c] - lead * matrix[rank][c]
                matrix[r][c] = value // previous
            matrix[r][col] = 0

        previous = head
        rank += 1
        if rank == height:
            break

    return rank


def _field_rank(rows, domain) -> int:
    matrix = [list(row) for row in rows]
    if not matrix:
        return 0

    height, width = len(matrix), len(matrix[0])
    rank = 0

    for col in range(width):
        pivot = next(
            (r for r in range(rank, height) if not domain.is_zero(matrix[r][col])),
            None,
        )
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]

        head = matrix[rank][col]
        for r in range(rank + 1, height):
            if domain.is_zero(matrix[r][col]):
                continue
            ratio = matrix[r][col] / head
            for c in range(col, width):
                matrix[r][c] = matrix[r][c] - ratio * matrix[rank][c]

        rank += 1
        if rank == height:
            break

    return rank


def _modular_rank(rows, prime: int) -> int:
    matrix = [[value % prime for value in row] for row in rows]
    if not matrix:
        return 0

    height, width = len(matrix), len(matrix[0])
    rank = 0

    for col in range(width):
        pivot = next((r for r in range(rank, height) if matrix[r][col]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]

        inverse = pow(matrix[rank][col], -1, prime)
        top = matrix[rank]
        for r in range(rank + 1, height):
            lead = matrix[r][col]
            if not lead:
                continue
            ratio = lead * inverse % prime
            row = matrix[r]
            for c in range(col, width):
                row[c] = (row[c] - ratio * top[c]) % prime

        rank += 1
        if rank == height:
            break

    return rank


def matrix_rank(rows, domain) -> int:
    """
    Posto exato de uma matriz (lista de linhas) sobre o domínio.

    Característica 0: limpa denominadores linha a linha e calcula o posto
    módulo RANK_PRIME. O posto modular nunca excede o racional, então um
    posto modular cheio é a resposta; caso contrário, Bareiss sobre inteiros.
    Característica p: eliminação gaussiana em 𝔽_p.
    """
    if domain.characteristic:
        return _field_rank(rows, domain)

    integer_rows = []
    for row in rows:
        values = [Fraction(value) for value in row]
        scale = math.lcm(*(value.denominator for value in values)) if values else 1
        integer_rows.append([int(value * scale) for value in values])

    if not integer_rows:
        return 0

    full = min(len(integer_rows), len(integer_rows[0]))
    if _modular_rank(integer_rows, RANK_PRIME) == full:
        return full
    return _bareiss_rank(integer_rows)
