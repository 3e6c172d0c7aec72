"""Formato texto de quadros: linhas por ';', entradas por espaço, k̄ = 'kb'."""

from apps.core.exceptions import TableauParseError
from apps.tableaux.models import IndexLetter, Partition, Tableau

EMPTY_TABLEAU = "-"


def parse_letter(token: str) -> IndexLetter:
    text = token.strip()
    barred = text.endswith("b")
    digits = text[:-1] if barred else text

    if not digits.isdigit():
        raise TableauParseError(f"Letra inválida: {token!r}")

    index = int(digits)
    if index == 0 and barred:
        raise TableauParseError("A letra 0 não tem barra")
    return IndexLetter(index, barred)


def format_letter(letter: IndexLetter) -> str:
    return letter.label


def parse_tableau(text: str) -> Tableau:
    """
    Converte texto em quadro.

    '-' (ou texto vazio) é o quadro vazio. Formas irregulares são rejeitadas.
    """
    text = (text or "").strip()
    if text in ("", EMPTY_TABLEAU):
        return Tableau.empty()

    rows = []
    for chunk in text.split(";"):
        tokens = chunk.split()
        if not tokens:
            raise TableauParseError(f"Linha vazia em {text!r}")
        rows.append(tuple(parse_letter(token) for token in tokens))

    if any(len(rows[i]) < len(rows[i + 1]) for i in range(len(rows) - 1)):
        raise TableauParseError(f"Forma irregular em {text!r}")

    return Tableau(tuple(rows))


def format_tableau(tableau: Tableau) -> str:
    if not tableau.rows:
        return EMPTY_TABLEAU
    return "; ".join(" ".join(format_letter(x) for x in row) for row in tableau.rows)


def parse_shape(text: str):
    """'2,1' ou '(2,1)' → Partition."""
    cleaned = (text or "").strip().strip("()")
    if not cleaned:
        return Partition(())
    try:
        return Partition(tuple(int(part) for part in cleaned.split(",")))
    except ValueError as exc:
        raise TableauParseError(f"Forma inválida: {text!r}") from exc
