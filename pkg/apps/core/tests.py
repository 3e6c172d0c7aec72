from fractions import Fraction
from unittest import TestCase

from apps.core.domains import (
    QQ,
    ZHALF,
    PrimeFieldDomain,
    ensure_same_domain,
    is_dyadic,
    is_power_of_two,
    parse_domain,
)
from apps.core.exceptions import CoefficientDomainError, DomainError
from apps.core.linalg import (
    RANK_PRIME,
    determinant,
    matrix_rank,
    permutation_sign,
    placement_sign,
    solve,
)


def lift(rows, domain):
    return [[domain.convert(value) for value in row] for row in rows]


class DomainTestCase(TestCase):
    """Testes dos domínios de coeficientes."""

    def setUp(self):
        self.f5 = PrimeFieldDomain(5)
        self.f7 = PrimeFieldDomain(7)

    def test_rational_convert(self):
        """Testa conversão de texto e inteiros em ℚ."""
        self.assertEqual(QQ.convert("3/4"), Fraction(3, 4))
        self.assertEqual(QQ.convert(2), Fraction(2))
        self.assertEqual(QQ.half(), Fraction(1, 2))

    def test_dyadic_accepts_powers_of_two(self):
        """Testa ℤ[1/2] com denominador potência de 2."""
        self.assertEqual(ZHALF.convert("-3/8"), Fraction(-3, 8))

    def test_dyadic_rejects_other_denominators(self):
        """Testa erro para 1/3 em ℤ[1/2]."""
        with self.assertRaises(CoefficientDomainError):
            ZHALF.convert(Fraction(1, 3))

    def test_prime_field_half(self):
        """Testa ½ em 𝔽₅ e 𝔽₇."""
        self.assertEqual(self.f5.half(), self.f5.convert(3))
        self.assertEqual(self.f7.half() * self.f7.convert(2), self.f7.one)

    def test_prime_field_fraction(self):
        """Testa 1/3 em 𝔽₇ (= 5)."""
        self.assertEqual(self.f7.convert("1/3"), self.f7.convert(5))

    def test_prime_field_bad_denominator(self):
        """Testa erro para denominador múltiplo de p."""
        with self.assertRaises(CoefficientDomainError):
            self.f7.convert(Fraction(1, 7))

    def test_prime_field_characteristic(self):
        """Testa rejeição de característica 2 e de não primos."""
        for p in (2, 4, 9):
            with self.assertRaises(CoefficientDomainError):
                PrimeFieldDomain(p)

    def test_format_parse(self):
        """Testa que parse inverte format."""
        for domain in (QQ, ZHALF, self.f5):
            value = domain.convert("-1/2")
            self.assertEqual(domain.parse(domain.format(value)), value)

    def test_zero_and_one(self):
        """Testa is_zero, zero e one."""
        for domain in (QQ, self.f5):
            self.assertTrue(domain.is_zero(domain.zero))
            self.assertFalse(domain.is_zero(domain.one))
        self.assertTrue(self.f5.is_zero(self.f5.convert(10)))

    def test_parse_domain(self):
        """Testa construção do domínio a partir do texto."""
        self.assertEqual(parse_domain("q"), QQ)
        self.assertEqual(parse_domain(" ZHALF "), ZHALF)
        self.assertEqual(parse_domain("f7"), self.f7)

    def test_parse_domain_invalid(self):
        """Testa erro para texto desconhecido ou módulo inválido."""
        for text in ("r", "f", "f9", ""):
            with self.assertRaises(DomainError):
                parse_domain(text)

    def test_ensure_same_domain(self):
        """Testa erro ao misturar domínios."""
        self.assertEqual(ensure_same_domain(self.f5, PrimeFieldDomain(5)), self.f5)
        with self.assertRaises(CoefficientDomainError):
            ensure_same_domain(QQ, ZHALF)

    def test_dyadic_predicates(self):
        """Testa is_power_of_two e is_dyadic."""
        self.assertEqual(
            [is_power_of_two(v) for v in (0, 1, 2, 6, 8)],
            [False, True, True, False, True],
        )
        self.assertTrue(is_dyadic(Fraction(3, 8)))
        self.assertFalse(is_dyadic(Fraction(1, 6)))


class PermutationSignTestCase(TestCase):
    """Testes de sinais de permutação."""

    def test_identity(self):
        """Testa sequência ordenada → +1."""
        self.assertEqual(permutation_sign([1, 2, 3]), 1)

    def test_transposition(self):
        """Testa uma troca → −1."""
        self.assertEqual(permutation_sign([2, 1, 3]), -1)

    def test_cycle(self):
        """Testa ciclo de comprimento 3 → +1."""
        self.assertEqual(permutation_sign([3, 1, 2]), 1)

    def test_repeated_entry(self):
        """Testa repetição → 0."""
        self.assertEqual(permutation_sign([1, 1, 2]), 0)

    def test_placement_sign(self):
        """Testa posições escolhidas completadas pelas restantes."""
        self.assertEqual(placement_sign([0, 1], 3), 1)
        self.assertEqual(placement_sign([1, 0], 3), -1)
        self.assertEqual(placement_sign([2], 3), 1)
        self.assertEqual(placement_sign([1], 3), -1)


class DeterminantTestCase(TestCase):
    """Testes do determinante exato."""

    def test_empty(self):
        """Testa matriz 0×0 → 1."""
        self.assertEqual(determinant([], QQ), 1)

    def test_rational(self):
        """Testa 2×2 sobre ℚ."""
        self.assertEqual(determinant(lift([[1, 2], [3, 4]], QQ), QQ), -2)

    def test_needs_pivoting(self):
        """Testa matriz com zero na diagonal."""
        self.assertEqual(determinant(lift([[0, 1], [1, 0]], QQ), QQ), -1)

    def test_singular(self):
        """Testa matriz singular → 0."""
        self.assertEqual(determinant(lift([[1, 2], [2, 4]], QQ), QQ), 0)

    def test_three_by_three(self):
        """Testa 3×3 com pivô nulo e frações: det = −5/2."""
        rows = lift([[0, 1, 2], ["1/2", 1, 0], [1, 0, 1]], QQ)
        self.assertEqual(determinant(rows, QQ), Fraction(-5, 2))

    def test_prime_field(self):
        """Testa o mesmo determinante reduzido a 𝔽₅."""
        f5 = PrimeFieldDomain(5)
        self.assertEqual(determinant(lift([[1, 2], [3, 4]], f5), f5), f5.convert(-2))


class SolveTestCase(TestCase):
    """Testes da solução de sistemas."""

    def test_diagonal(self):
        """Testa sistema diagonal."""
        result = solve(lift([[2, 0], [0, 4]], QQ), lift([[2], [2]], QQ), QQ)
        self.assertEqual(result, [[1], [Fraction(1, 2)]])

    def test_inverse(self):
        """Testa inversa com rhs identidade."""
        matrix = lift([[1, 1], [0, 1]], QQ)
        result = solve(matrix, lift([[1, 0], [0, 1]], QQ), QQ)
        self.assertEqual(result, [[1, -1], [0, 1]])

    def test_singular(self):
        """Testa None para matriz singular."""
        self.assertIsNone(solve(lift([[1, 2], [2, 4]], QQ), lift([[1], [1]], QQ), QQ))


class RankTestCase(TestCase):
    """Testes do posto exato."""

    def test_empty(self):
        """Testa matriz sem linhas."""
        self.assertEqual(matrix_rank([], QQ), 0)

    def test_rational_rank(self):
        """Testa posto com frações (denominadores limpos)."""
        rows = lift([["1/2", 1, 0], [1, 2, 0], [0, "1/3", 1]], QQ)
        self.assertEqual(matrix_rank(rows, QQ), 2)

    def test_full_rank(self):
        """Testa posto cheio sobre ℚ."""
        self.assertEqual(matrix_rank(lift([[1, 2], [3, 1]], QQ), QQ), 2)

    def test_prime_field_drops_rank(self):
        """Testa que det = −5 zera em 𝔽₅."""
        f5 = PrimeFieldDomain(5)
        self.assertEqual(matrix_rank(lift([[1, 2], [3, 1]], f5), f5), 1)

    def test_wide_matrix(self):
        """Testa matriz com mais colunas que linhas."""
        rows = lift([[0, 1, 2, 3], [0, 2, 4, 7]], QQ)
        self.assertEqual(matrix_rank(rows, QQ), 2)

    def test_hilbert_full_rank(self):
        """Testa matriz de Hilbert 6×6: posto cheio com denominadores grandes."""
        rows = [[Fraction(1, i + j + 1) for j in range(6)] for i in range(6)]
        self.assertEqual(matrix_rank(rows, QQ), 6)

    def test_dependent_rows(self):
        """Testa linha igual à soma das outras duas → posto 2."""
        rows = lift([[1, 2, 3, 4], [5, 6, 7, 9], [6, 8, 10, 13]], QQ)
        self.assertEqual(matrix_rank(rows, QQ), 2)

    def test_multiple_of_modulus(self):
        """Testa entradas múltiplas do primo modular: posto exato mantido."""
        rows = lift([[RANK_PRIME, 0], [0, 1]], QQ)
        self.assertEqual(matrix_rank(rows, QQ), 2)

    def test_agrees_with_determinant(self):
        """Testa posto 3 exatamente quando det ≠ 0 em matrizes 3×3."""
        for rows in (
            [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
            [[1, 2, 3], [4, 5, 6], [7, 8, 9]],
            [[1, "1/2", "1/3"], ["1/2", "1/3", "1/4"], ["1/3", "1/4", "1/5"]],
        ):
            matrix = lift(rows, QQ)
            full = determinant(matrix, QQ) != 0
            self.assertEqual(matrix_rank(matrix, QQ) == 3, full)
