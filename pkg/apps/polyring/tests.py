from fractions import Fraction
from itertools import combinations
from unittest import TestCase

from apps.core.domains import QQ, PrimeFieldDomain
from apps.core.exceptions import CoefficientDomainError, DomainError
from apps.polyring.models import Polynomial
from apps.polyring.services.commands import (
    bideterminant,
    constant,
    det_poly,
    gamma_poly,
    minor,
    variable,
)
from apps.polyring.services.queries import (
    evaluate,
    evaluate_bideterminant,
    format_polynomial,
)
from apps.tableaux.domain.rules import gl_alphabet
from apps.tableaux.utils import parse_letter, parse_tableau


def L(label):
    return parse_letter(label)


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def sample_matrix(n, shift=0):
    return [
        [Fraction((3 * i + 5 * j + shift) % 7 - 3, 1 + (i + j) % 3) for j in range(n)]
        for i in range(n)
    ]


def matmul(a, b):
    size = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(size)) for j in range(size)]
        for i in range(size)
    ]


def transpose(a):
    return [list(row) for row in zip(*a)]


class MinorTestCase(TestCase):
    """Testes de menores simbólicos."""

    def test_empty_minor(self):
        """Testa o determinante vazio."""
        self.assertEqual(minor([], []), constant(1))

    def test_one_by_one(self):
        """Testa [1̄:1] = X(1̄,1)."""
        self.assertEqual(minor([L("1b")], [L("1")]), variable(L("1b"), L("1")))

    def test_two_by_two(self):
        """Testa a expansão 2×2."""
        expected = (
            variable(L("1"), L("2b")) * variable(L("1b"), L("2"))
            - variable(L("1"), L("2")) * variable(L("1b"), L("2b"))
        )
        self.assertEqual(minor([L("1"), L("1b")], [L("2b"), L("2")]), expected)

    def test_repeated_index_is_zero(self):
        """Testa índice repetido ⇒ 0."""
        self.assertTrue(minor([L("1"), L("1")], [L("1b"), L("2")]).is_zero)
        self.assertTrue(minor([L("1b"), L("2")], [L("2"), L("2")]).is_zero)

    def test_length_mismatch(self):
        """Testa erro de tamanho."""
        with self.assertRaises(DomainError):
            minor([L("1")], [L("1"), L("2")])

    def test_alternating(self):
        """Testa troca de linhas muda o sinal."""
        rows = [L("1b"), L("2"), L("2b")]
        cols = [L("1"), L("1b"), L("2")]
        swapped = [rows[1], rows[0], rows[2]]
        self.assertEqual(minor(swapped, cols), -minor(rows, cols))


class BideterminantTestCase(TestCase):
    """Testes de bideterminantes."""

    def test_row_pair(self):
        """Testa [i ī : j k] = X(i,j)X(ī,k)."""
        left = parse_tableau("2 2b")
        right = parse_tableau("1 2")
        expected = variable(L("2"), L("1")) * variable(L("2b"), L("2"))
        self.assertEqual(bideterminant(left, right), expected)

    def test_shape_mismatch(self):
        """Testa erro de forma."""
        with self.assertRaises(DomainError):
            bideterminant(parse_tableau("1"), parse_tableau("1 1"))

    def test_homogeneous_degree(self):
        """Testa grau |λ|."""
        poly = bideterminant(parse_tableau("1b 1; 2b"), parse_tableau("1b 2; 2"))
        self.assertTrue(poly.is_homogeneous())
        self.assertEqual(poly.degree, 3)

    def test_transpose_law(self):
        """Testa [S:T](Aᵗ) = [T:S](A)."""
        left = parse_tableau("1b 1; 2b")
        right = parse_tableau("1 2b; 2")
        matrix = sample_matrix(4)
        self.assertEqual(
            evaluate(bideterminant(left, right), transpose(matrix), 4),
            evaluate(bideterminant(right, left), matrix, 4),
        )

    def test_fast_path_matches_symbolic(self):
        """Testa evaluate_bideterminant contra a expansão simbólica."""
        left = parse_tableau("1b 2; 1 2b; 2")
        right = parse_tableau("1 1; 2b 2; 2")
        matrix = sample_matrix(4, shift=2)
        self.assertEqual(
            evaluate_bideterminant(left, right, matrix, 4),
            evaluate(bideterminant(left, right), matrix, 4),
        )


class DetGammaTestCase(TestCase):
    """Testes de det e γ."""

    def test_det_three(self):
        """Testa que det₃ tem 6 termos de grau 3."""
        poly = det_poly(3)
        self.assertEqual(len(poly), 6)
        self.assertEqual(poly.degree, 3)
        self.assertEqual(evaluate(poly, identity(3), 3), 1)

    def test_det_is_full_column(self):
        """Testa det = [V:V] para a coluna cheia V."""
        column = parse_tableau("; ".join(x.label for x in gl_alphabet(4)))
        self.assertEqual(bideterminant(column, column), det_poly(4))

    def test_gamma_identity(self):
        """Testa γ(I) = 1."""
        self.assertEqual(evaluate(gamma_poly(4), identity(4), 4), 1)

    def test_gamma_xi(self):
        """Testa γ(ξ(c)) = c para n par."""
        matrix = identity(4)
        for letter in gl_alphabet(4):
            if letter.barred:
                matrix[letter.position(4)][letter.position(4)] = Fraction(3)
        self.assertEqual(evaluate(gamma_poly(4), matrix, 4), 3)

    def test_gamma_scalar_odd(self):
        """Testa γ(c·I) = c² para n ímpar."""
        matrix = [[2 * x for x in row] for row in identity(3)]
        self.assertEqual(evaluate(gamma_poly(3), matrix, 3), 4)


class EvaluationTestCase(TestCase):
    """Testes de avaliação."""

    def test_product_homomorphism(self):
        """Testa evaluate(pq) = evaluate(p)·evaluate(q)."""
        p = minor([L("1b"), L("2")], [L("1"), L("2b")]) + constant(2)
        q = variable(L("2"), L("2")) - variable(L("1b"), L("1"))
        matrix = sample_matrix(4, shift=1)
        expected = evaluate(p, matrix, 4) * evaluate(q, matrix, 4)
        self.assertEqual(evaluate(p * q, matrix, 4), expected)

    def test_binet_cauchy(self):
        """Testa a expansão de Binet–Cauchy para colunas de tamanho ≤ 2."""
        letters = gl_alphabet(4)
        g = sample_matrix(4, shift=3)
        a = sample_matrix(4, shift=5)
        ga = matmul(g, a)
        for k in (1, 2):
            rows = letters[:k]
            cols = letters[-k:]
            total = sum(
                evaluate(minor(rows, u), g, 4) * evaluate(minor(u, cols), a, 4)
                for u in combinations(letters, k)
            )
            self.assertEqual(evaluate(minor(rows, cols), ga, 4), total)


class PolynomialTestCase(TestCase):
    """Testes da aritmética esparsa."""

    def test_no_zero_coefficients(self):
        """Testa que p − p é o polinômio zero."""
        p = variable(L("1"), L("1")) * 3
        self.assertTrue((p - p).is_zero)
        self.assertEqual(len(p - p), 0)

    def test_power(self):
        """Testa potência."""
        x = variable(L("1"), L("1"))
        self.assertEqual(x ** 3, x * x * x)
        self.assertEqual(x ** 0, constant(1))

    def test_prime_field_reduction(self):
        """Testa coeficientes em 𝔽₅."""
        f5 = PrimeFieldDomain(5)
        self.assertEqual(Polynomial.constant(6, f5), Polynomial.constant(1, f5))
        self.assertTrue(Polynomial.constant(10, f5).is_zero)

    def test_mixed_domains(self):
        """Testa erro ao misturar domínios."""
        with self.assertRaises(CoefficientDomainError):
            constant(1, QQ) + constant(1, PrimeFieldDomain(7))

    def test_format(self):
        """Testa o formato uma linha por termo."""
        poly = variable(L("1b"), L("1")) * 2 - 1
        self.assertEqual(format_polynomial(poly), "2 * X(1b,1)\n-1")
        self.assertEqual(format_polynomial(Polynomial.zero()), "0")
