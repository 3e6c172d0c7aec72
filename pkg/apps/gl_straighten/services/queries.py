"""Leituras sobre combinações: polinômio, avaliação, certificado, contagens."""

from apps.core.exceptions import TableauParseError
from apps.gl_straighten.models import Combination
from apps.polyring.models import Polynomial
from apps.polyring.services.commands import bideterminant, gamma_poly
from apps.polyring.services.queries import evaluate, evaluate_bideterminant
from apps.tableaux.domain.rules import gl_alphabet
from apps.tableaux.services.queries import enumerate_gl_standard, partitions_of
from apps.tableaux.utils import format_tableau, parse_tableau


def symbolic_poly(combination: Combination, n: int) -> Polynomial:
    """Σ coef · γ^k · [S:T] como polinômio."""
    domain = combination.domain
    total = Polynomial.zero(domain)
    gamma = None

    for term in combination:
        poly = bideterminant(term.left, term.right, domain) * term.coef
        if term.gamma_pow:
            if gamma is None:
                gamma = gamma_poly(n, domain)
            poly = poly * gamma ** term.gamma_pow
        total = total + poly
    return total


def evaluate_combination(combination: Combination, matrix, n: int, gamma_value=None):
    """Avaliação numérica rápida; γ é calculado da matriz se não for dado."""
    domain = combination.domain
    total = domain.zero

    for term in combination:
        bidet = evaluate_bideterminant(term.left, term.right, matrix, n, domain)
        value = term.coef * bidet
        if term.gamma_pow:
            if gamma_value is None:
                gamma_value = evaluate(gamma_poly(n, domain), matrix, n)
            value = value * gamma_value ** term.gamma_pow
        total = total + value
    return total


def format_certificate(combination: Combination) -> str:
    lines = [
        "\t".join((
            combination.domain.format(term.coef),
            str(term.gamma_pow),
            format_tableau(term.left),
            format_tableau(term.right),
        ))
        for term in combination
    ]
    return "\n".join(lines)


def parse_certificate(text: str, domain) -> Combination:
    combination = Combination(domain)
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != 4:
            raise TableauParseError(f"Linha {number} do certificado mal formada")
        coef, gamma_pow, left, right = fields
        combination.add_term(
            domain.parse(coef),
            parse_tableau(left),
            parse_tableau(right),
            int(gamma_pow),
        )
    return combination


def count_gl_standard_pairs(n: int, degree: int) -> int:
    """Número de pares (S, T) GL(n)-padrão com |λ| = degree."""
    letters = gl_alphabet(n)
    return sum(
        len(enumerate_gl_standard(shape, letters)) ** 2
        for shape in partitions_of(degree, max_rows=n)
    )
