"""
Regras combinatórias do endireitamento O(n).

Responsabilidade:
- Conjuntos A e C de um par de colunas e o conjunto excluído de cada caso
- Posições de substituição e sinais de reordenação
- Sinal ε_E de (T,E) e sinal do complemento de uma coluna
- NÃO construir combinações
"""

from apps.core.exceptions import DomainError
from apps.core.linalg import permutation_sign, placement_sign
from apps.tableaux.domain.rules import gl_alphabet
from apps.tableaux.models import IndexLetter, ViolationKind


def letters_up_to(j: int, n: int) -> list[IndexLetter]:
    """Letras i ≤ j em ℐ(n): 1̄, 1, ..., ȷ̄, j."""
    bound = IndexLetter(j)
    return [letter for letter in gl_alphabet(n) if letter <= bound]


def pair_sets(first, second, j: int, n: int):
    """
    A = {i ≤ j : i ∈ S₁, ī ∈ S₂};  C = {i ≤ j : i ∉ S₁, ī ∉ S₂}.
    """
    first, second = set(first), set(second)
    low = letters_up_to(j, n)
    paired = [i for i in low if i in first and i.bar() in second]
    missing = [i for i in low if i not in first and i.bar() not in second]
    return paired, missing


def excluded_for(kind: ViolationKind, missing, j: int) -> frozenset:
    excluded = set(missing)
    if kind == ViolationKind.OS2:
        target = IndexLetter(j, True)
    elif kind == ViolationKind.OS3:
        target = IndexLetter(j)
    else:
        return frozenset(excluded)

    if target not in excluded:
        raise DomainError(f"{target} deveria estar em C para {kind.value}")
    excluded.discard(target)
    return frozenset(excluded)


def replacement_positions(first, second, paired):
    """(P, Q): posições de A na coluna 1 e de Ā (na mesma ordem) na coluna 2."""
    first, second = list(first), list(second)
    return (
        [first.index(letter) for letter in paired],
        [second.index(letter.bar()) for letter in paired],
    )


def reorder_sign(
    first_positions, second_positions, first_length: int, second_length: int
) -> int:
    """ρ: sinal de levar as linhas escolhidas para o topo das duas colunas."""
    return (
        placement_sign(first_positions, first_length)
        * placement_sign(second_positions, second_length)
    )


def pairs_in(first, second) -> list[IndexLetter]:
    """Letras i da coluna 1 com ī na coluna 2."""
    second = set(second)
    return [letter for letter in first if letter.bar() in second]


def deletion_sign(first, second, deleted) -> int:
    """ε_E: sinal de levar os pares (i, ī), i ∈ E crescente, ao topo de T."""
    first, second = list(first), list(second)
    chosen = sorted(deleted)
    p = [first.index(letter) for letter in chosen]
    q = [second.index(letter.bar()) for letter in chosen]
    return reorder_sign(p, q, len(first), len(second))


def delete_letters(first, second, deleted):
    """(T,E) como par de colunas."""
    deleted = set(deleted)
    bars = {letter.bar() for letter in deleted}
    return (
        tuple(x for x in first if x not in deleted),
        tuple(x for x in second if x not in bars),
    )


def complement_column(column, n: int) -> tuple:
    """S̄′: barras das letras de ℐ fora de S, em ordem crescente."""
    present = set(column)
    return tuple(
        sorted(letter.bar() for letter in gl_alphabet(n) if letter not in present)
    )


def complement_sign(column, n: int) -> int:
    """
    Sinal do menor complementar de Jacobi para uma coluna ordenada.

    (−1)^{Σ posições de S (base 1)} vezes o sinal da sequência das barras
    do complemento, listado em ordem de ℐ.
    """
    column = tuple(column)
    if len(set(column)) != len(column):
        raise DomainError("Coluna com entrada repetida")

    present = set(column)
    exponent = sum(letter.position(n) + 1 for letter in column)
    rest = [letter.bar() for letter in gl_alphabet(n) if letter not in present]
    sign = permutation_sign(rest)
    return -sign if exponent % 2 else sign
