"""
Regras combinatórias de quadros.

Responsabilidade:
- Alfabeto ordenado ℐ e a involução barra
- Partições: conjugada, dominância, ordem total de formas
- Ordem ≺ entre quadros de mesma forma
- Predicados GL(n)-padrão e O(n)-padrão (OS1, OS2, OS3, soma de colunas)
- NÃO fazer álgebra polinomial
"""

from apps.core.exceptions import DomainError, InvalidDimensionError
from apps.tableaux.models import (
    IndexLetter,
    ONStandardReport,
    Ordering,
    Partition,
    Tableau,
    Violation,
    ViolationKind,
)

ZERO = IndexLetter(0)


# ================================================================
# ALFABETO
# ================================================================

def gl_alphabet(n: int) -> list[IndexLetter]:
    """ℐ(n) para qualquer n ≥ 1 (o trabalho GL não exige n ≥ 3)."""
    if n < 1:
        raise InvalidDimensionError(f"Dimensão inválida: {n}")

    letters = []
    for k in range(1, n // 2 + 1):
        letters.append(IndexLetter(k, True))
        letters.append(IndexLetter(k))
    if n % 2:
        letters.append(ZERO)
    return letters


def alphabet(n: int) -> list[IndexLetter]:
    if n < 3:
        raise InvalidDimensionError(f"O(n) exige n ≥ 3, recebido {n}")
    return gl_alphabet(n)


def bar(letter: IndexLetter) -> IndexLetter:
    return letter.bar()


def letter_for(i: int) -> IndexLetter:
    """A letra i (sem barra) usada nas contagens αᵢ, βᵢ."""
    return IndexLetter(i)


def validate_letters(tableau: Tableau, n: int):
    allowed = set(gl_alphabet(n))
    for letter in tableau.letters():
        if letter not in allowed:
            raise DomainError(f"Letra {letter} fora de ℐ({n})")


# ================================================================
# PARTIÇÕES
# ================================================================

def conjugate(shape: Partition) -> Partition:
    return shape.conjugate()


def _prefix_sums(parts, length):
    total, sums = 0, []
    for i in range(length):
        total += parts[i] if i < len(parts) else 0
        sums.append(total)
    return sums


def dominance_lt(first: Partition, second: Partition) -> bool:
    """λ ⊲ μ estrito; exige |λ| = |μ|."""
    if first.size != second.size:
        raise DomainError(f"Dominância exige mesmo tamanho: {first} e {second}")
    if first == second:
        return False

    length = max(len(first.parts), len(second.parts))
    first_sums = _prefix_sums(first.parts, length)
    second_sums = _prefix_sums(second.parts, length)
    return all(a <= b for a, b in zip(first_sums, second_sums))


def shape_sort_key(shape: Partition) -> tuple:
    # lex refina dominância, então (tamanho, partes) realiza a ordem total
    return (shape.size, shape.parts)


def shape_order_lt(first: Partition, second: Partition) -> bool:
    if first.size != second.size:
        return first.size < second.size
    if dominance_lt(first, second):
        return True
    if dominance_lt(second, first):
        return False
    return first.parts < second.parts


def box_moves(shape: Partition):
    """
    Formas obtidas movendo a caixa do fundo de uma coluna para o fundo de
    uma coluna anterior (colunas reordenadas por comprimento).
    """
    columns = list(shape.conjugate().parts)
    for source in range(1, len(columns)):
        for target in range(source):
            moved = list(columns)
            moved[source] -= 1
            moved[target] += 1
            lengths = sorted((c for c in moved if c > 0), reverse=True)
            yield Partition(tuple(lengths)).conjugate()


# ================================================================
# ORDEM ≺
# ================================================================

def prec_key(tableau: Tableau) -> tuple:
    """Chave cuja ordem lexicográfica coincide com ≺ (coluna da direita primeiro)."""
    return tuple(
        tuple(letter.key for letter in column)
        for column in reversed(tableau.columns)
    )


def tableau_prec(first: Tableau, second: Tableau) -> Ordering:
    if first.shape != second.shape:
        raise DomainError("Comparação ≺ exige quadros de mesma forma")

    a, b = prec_key(first), prec_key(second)
    if a == b:
        return Ordering.EQ
    return Ordering.LT if a < b else Ordering.GT


# ================================================================
# GL(n)-PADRÃO
# ================================================================

def is_column_strict(tableau: Tableau) -> bool:
    return all(
        column[r] < column[r + 1]
        for column in tableau.columns
        for r in range(len(column) - 1)
    )


def _gl_failure(tableau: Tableau, n: int):
    if len(tableau.rows) > n:
        return (n + 1, 1)

    for i, row in enumerate(tableau.rows, start=1):
        for j in range(len(row) - 1):
            if row[j] > row[j + 1]:
                return (i, j + 1)

    for j, column in enumerate(tableau.columns, start=1):
        for r in range(len(column) - 1):
            if not column[r] < column[r + 1]:
                return (r + 1, j)

    return None


def is_gl_standard(tableau: Tableau, n: int) -> bool:
    return _gl_failure(tableau, n) is None


def first_row_violation(tableau: Tableau):
    """
    Primeiro par de colunas adjacentes (c, c+1) com linha decrescente.

    Retorna (c, t) base 1, ou None.
    """
    columns = tableau.columns
    for c in range(len(columns) - 1):
        left, right = columns[c], columns[c + 1]
        for t in range(len(right)):
            if left[t] > right[t]:
                return c + 1, t + 1
    return None


# ================================================================
# O(n)-PADRÃO
# ================================================================

def _count_at_most(column, letter) -> int:
    return sum(1 for entry in column if entry <= letter)


def on_standard_report(tableau: Tableau, n: int) -> ONStandardReport:
    """
    Relatório completo das condições O(n).

    Para entrada não GL-padrão devolve só a violação GL.
    """
    failure = _gl_failure(tableau, n)
    if failure is not None:
        return ONStandardReport(
            standard=False,
            gl_standard=False,
            violations=(Violation(ViolationKind.GL, 0, (failure,)),),
            alpha=(),
            beta=(),
        )

    first, second = tableau.column(1), tableau.column(2)
    m = n // 2
    alpha = tuple(_count_at_most(first, letter_for(i)) for i in range(1, m + 1))
    beta = tuple(_count_at_most(second, letter_for(i)) for i in range(1, m + 1))

    violations = []

    if len(first) + len(second) > n:
        violations.append(Violation(ViolationKind.COLSUM, 0))

    for i in range(1, m + 1):
        a, b = alpha[i - 1], beta[i - 1]
        mine, barred = letter_for(i), letter_for(i).bar()

        if a + b > 2 * i:
            violations.append(Violation(ViolationKind.OS1, i, ((a, 1), (b, 2))))
            continue

        if a + b != 2 * i:
            continue

        if a > b >= 1:
            triggered = tableau.entry(a, 1) == mine and tableau.entry(b, 2) == barred
            if triggered and tableau.entry(a - 1, 1) != barred:
                violations.append(Violation(ViolationKind.OS2, i, ((a, 1), (b, 2))))

        elif a == b == i and tableau.entry(i, 1) == barred:
            row = tableau.rows[i - 1]
            for col in range(2, len(row) + 1):
                if row[col - 1] != mine:
                    continue
                if tableau.entry(i - 1, col) != barred:
                    violations.append(
                        Violation(ViolationKind.OS3, i, ((i, 1), (i, col)), column=col)
                    )

    return ONStandardReport(
        standard=not violations,
        gl_standard=True,
        violations=tuple(violations),
        alpha=alpha,
        beta=beta,
    )


def is_on_standard(tableau: Tableau, n: int) -> bool:
    return on_standard_report(tableau, n).standard


def satisfies_column_condition(shape: Partition, n: int) -> bool:
    columns = shape.conjugate().parts
    first = columns[0] if columns else 0
    second = columns[1] if len(columns) > 1 else 0
    return first + second <= n


# ================================================================
# CONSTRUTORES
# ================================================================

def basic_tableau(shape: Partition, n: int) -> Tableau:
    """T^λ: a linha k é constante igual à k-ésima menor letra de ℐ."""
    letters = gl_alphabet(n)
    if shape.rows > len(letters):
        raise DomainError(f"Forma {shape} tem mais de {n} linhas")
    return Tableau(tuple(
        tuple(letters[k] for _ in range(part))
        for k, part in enumerate(shape.parts)
    ))


def delete_pair(tableau: Tableau, letter: IndexLetter) -> Tableau:
    """(T,{i}): remove i da primeira coluna e ī da segunda."""
    columns = tableau.columns
    if len(columns) != 2:
        raise DomainError("delete_pair exige quadro de duas colunas")

    first, second = columns
    if letter not in first or letter.bar() not in second:
        raise DomainError(f"Par {letter}, {letter.bar()} não ocorre no quadro")

    first = tuple(x for x in first if x != letter)
    second = tuple(x for x in second if x != letter.bar())
    return Tableau.from_columns([column for column in (first, second) if column])
