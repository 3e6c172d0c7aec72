from fractions import Fraction
from itertools import combinations
from unittest import TestCase
from unittest.mock import patch

import pytest

from apps.core.domains import PrimeFieldDomain
from apps.core.exceptions import CapExceededError, DomainError
from apps.group_oracle.models import Component, FormMatrix, GroupPoint
from apps.group_oracle.services import (
    basis_suite,
    cayley_point,
    evaluate_on_point,
    evaluation_rank,
    point_batch,
    random_go_point,
    random_on_point,
    random_so_point,
    reduce_point,
    standard_basis,
    verify_on_group,
)
from apps.group_oracle.services.commands import reflection_point, similitude_point
from apps.on_straighten.models import Mode
from apps.polyring.services import (
    constant,
    det_poly,
    evaluate_bideterminant,
    gamma_poly,
    variable,
)
from apps.tableaux.domain.rules import gl_alphabet
from apps.tableaux.models import Tableau
from apps.tableaux.utils import parse_letter


def identity(n):
    return [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]


def zero_skew(n):
    return [[Fraction(0)] * n for _ in range(n)]


class FormMatrixTestCase(TestCase):
    """Testes da matriz da forma bilinear."""

    def test_odd_dimension(self):
        """Testa J para n=3: par 1̄ ↔ 1 e 0 fixo."""
        entries = FormMatrix(3).entries
        self.assertEqual(entries[0][1], 1)
        self.assertEqual(entries[1][0], 1)
        self.assertEqual(entries[2][2], 1)
        self.assertEqual(entries[0][0], 0)

    def test_symmetric_involution(self):
        """Testa J simétrica com J² = I."""
        for n in (3, 4, 5, 6):
            form = FormMatrix(n)
            self.assertTrue(form.is_symmetric)
            entries = form.entries
            square = [
                [sum(entries[r][k] * entries[k][c] for k in range(n)) for c in range(n)]
                for r in range(n)
            ]
            self.assertEqual(square, identity(n))


class GroupPointTestCase(TestCase):
    """Testes do construtor de pontos."""

    def test_identity(self):
        """Testa a identidade como ponto de O(n)."""
        point = GroupPoint(4, identity(4), 1, 1)
        self.assertEqual(point.det_value, 1)

    def test_rejects_non_orthogonal(self):
        """Testa recusa de matriz que não preserva a forma."""
        matrix = identity(3)
        matrix[0][0] = Fraction(2)
        with self.assertRaises(DomainError):
            GroupPoint(3, matrix, 2, 1)

    def test_rejects_wrong_determinant(self):
        """Testa recusa de det_value incorreto."""
        with self.assertRaises(DomainError):
            GroupPoint(3, identity(3), -1, 1)

    def test_transpose_stays_in_group(self):
        """Testa gᵀ ∈ O(n)."""
        point = random_on_point(5, 3, Component.MINUS)
        self.assertEqual(point.transpose().det_value, -1)

    def test_gamma_homomorphism(self):
        """Testa γ(gh) = γ(g)γ(h)."""
        g = random_go_point(4, 1, Fraction(3))
        h = random_go_point(4, 2, Fraction(-1, 2))
        product = g * h
        self.assertEqual(
            evaluate_on_point(gamma_poly(4), product), g.gamma_value * h.gamma_value
        )


class CayleyTestCase(TestCase):
    """Testes da transformada de Cayley."""

    def test_zero_gives_identity(self):
        """Testa A = 0 → I."""
        point = cayley_point(3, zero_skew(3))
        self.assertEqual(point.matrix, tuple(tuple(row) for row in identity(3)))

    def test_rejects_non_skew(self):
        """Testa erro para A que não é J-antissimétrica."""
        skew = zero_skew(3)
        skew[0][0] = Fraction(1)
        with self.assertRaises(DomainError):
            cayley_point(3, skew)

    def test_deterministic_special_point(self):
        """Testa det = 1 e repetição exata pela semente."""
        for n in (3, 4, 5, 6):
            first = random_so_point(n, 42)
            self.assertEqual(first.det_value, 1)
            self.assertEqual(evaluate_on_point(det_poly(n), first), 1)
            self.assertEqual(first, random_so_point(n, 42))

    def test_singular_retry_logged_at_debug(self):
        """Testa nova tentativa após I + A singular registrada só em DEBUG."""
        singular = zero_skew(4)
        singular[0][0], singular[1][1] = Fraction(-1), Fraction(1)
        self.assertIsNone(cayley_point(4, singular))

        calls = []

        def flaky(n, skew):
            calls.append(skew)
            return None if len(calls) == 1 else cayley_point(n, skew)

        target = "apps.group_oracle.services.commands.cayley_point"
        with patch(target, side_effect=flaky):
            with self.assertLogs("apps.group_oracle", level="DEBUG") as logs:
                point = random_so_point(4, 42)

        self.assertGreaterEqual(len(calls), 2)
        self.assertEqual(point.det_value, 1)
        self.assertTrue(all(record.levelname == "DEBUG" for record in logs.records))


class ComponentTestCase(TestCase):
    """Testes da componente de determinante −1."""

    def test_odd_reflection(self):
        """Testa n ímpar: nega a posição 0."""
        matrix = reflection_point(3).matrix
        self.assertEqual([matrix[r][r] for r in range(3)], [1, 1, -1])

    def test_even_reflection(self):
        """Testa n par: troca 1̄ e 1."""
        matrix = reflection_point(4).matrix
        self.assertEqual((matrix[0][1], matrix[1][0], matrix[0][0]), (1, 1, 0))

    def test_minus_points(self):
        """Testa det_poly = −1 nos pontos MINUS."""
        for n in (3, 4):
            point = random_on_point(n, 8, Component.MINUS)
            self.assertEqual(evaluate_on_point(det_poly(n), point), -1)


class SimilitudeTestCase(TestCase):
    """Testes dos pontos de GO(n)."""

    def test_even_xi(self):
        """Testa γ(ξ(3)) = 3 para n=4."""
        point = similitude_point(4, 3)
        self.assertEqual(point.gamma_value, 3)
        self.assertEqual(evaluate_on_point(gamma_poly(4), point), 3)

    def test_odd_scalar(self):
        """Testa γ(2·I) = 4 para n=3."""
        point = similitude_point(3, 2)
        self.assertEqual(evaluate_on_point(gamma_poly(3), point), 4)

    def test_zero_multiplier(self):
        """Testa erro para c = 0."""
        with self.assertRaises(DomainError):
            random_go_point(4, 1, 0)

    def test_unit_multiplier(self):
        """Testa c = 1 → ponto de O(n)."""
        self.assertEqual(random_go_point(4, 5, 1).gamma_value, 1)


class PointBatchTestCase(TestCase):
    """Testes dos lotes de pontos."""

    def test_orthogonal_batch(self):
        """Testa 10 pontos distintos, pelo menos 2 com det = −1."""
        batch = point_batch(4, 10, 7)
        self.assertEqual(len(batch), 10)
        self.assertEqual(len({p.matrix for p in batch}), 10)
        self.assertGreaterEqual(sum(1 for p in batch if p.det_value == -1), 2)

    def test_similitude_batch(self):
        """Testa γ ≠ 1 em pontos de GO(4)."""
        for point in point_batch(4, 6, 7, Mode.GO):
            self.assertNotEqual(point.gamma_value, 1)

    def test_prime_field_batch(self):
        """Testa redução para 𝔽₅."""
        domain = PrimeFieldDomain(5)
        for point in point_batch(3, 5, 7, Mode.ON, domain):
            self.assertEqual(point.domain, domain)
            self.assertEqual(point.gamma_value, domain.one)

    def test_reduce_point(self):
        """Testa redução da identidade."""
        domain = PrimeFieldDomain(7)
        point = reduce_point(GroupPoint(3, identity(3), 1, 1), domain)
        self.assertEqual(point.det_value, domain.one)

    def test_gl_mode_rejected(self):
        """Testa erro no modo GL."""
        with self.assertRaises(DomainError):
            point_batch(3, 2, 1, Mode.GL)

    def test_default_mode(self):
        """Testa lote sem modo igual ao lote em Mode.ON."""
        self.assertEqual(point_batch(3, 3, 21), point_batch(3, 3, 21, Mode.ON))
        self.assertEqual(point_batch(3, 3, 21), point_batch(3, 3, 21, "on"))

    def test_deterministic(self):
        """Testa mesma semente → mesmos pontos."""
        self.assertEqual(point_batch(3, 4, 21), point_batch(3, 4, 21))


class VerifyTestCase(TestCase):
    """Testes de verificação por avaliação."""

    def setUp(self):
        """Configuração com pontos de O(4)."""
        self.points = point_batch(4, 6, 5)

    def test_contraction(self):
        """Testa Σᵢ X(i,1)X(ī,1̄) − 1 = 0 em O(n)."""
        self.assertTrue(verify_on_group(gamma_poly(4) - constant(1), self.points))

    def test_det_squared(self):
        """Testa det² − 1 = 0 em O(n)."""
        det = det_poly(4)
        self.assertTrue(verify_on_group(det * det - constant(1), self.points))

    def test_negative_control(self):
        """Testa polinômio não nulo em ponto genérico."""
        one = parse_letter("1")
        poly = variable(one, one) * variable(one, one) + constant(7)
        self.assertFalse(verify_on_group(poly, self.points))

    def test_bimodule_action(self):
        """Testa [S:T](gA) = Σ_U [S:U](g)·[U:T](A) para colunas de tamanho ≤ 2."""
        g = random_on_point(4, 3)
        a = random_on_point(4, 4, Component.MINUS)
        product = g * a
        letters = gl_alphabet(4)
        for length in (1, 2):
            columns = list(combinations(letters, length))
            for s in columns:
                for t in columns:
                    left, right = Tableau.from_columns([s]), Tableau.from_columns([t])
                    middles = [Tableau.from_columns([u]) for u in columns]
                    expected = sum(
                        evaluate_bideterminant(left, middle, g.matrix, 4)
                        * evaluate_bideterminant(middle, right, a.matrix, 4)
                        for middle in middles
                    )
                    self.assertEqual(
                        evaluate_bideterminant(left, right, product.matrix, 4), expected
                    )


class RankTestCase(TestCase):
    """Testes do posto de avaliação."""

    def test_constant(self):
        """Testa {1} → posto 1."""
        self.assertEqual(evaluation_rank([constant(1)], point_batch(3, 3, 1)), 1)

    def test_determinant_components(self):
        """Testa {det − 1, det + 1} → posto 2 com as duas componentes."""
        det = det_poly(3)
        functions = [det - constant(1), det + constant(1)]
        self.assertEqual(evaluation_rank(functions, point_batch(3, 4, 2)), 2)

    def test_standard_basis_count(self):
        """Testa 44 bideterminantes O(3)-padrão de grau ≤ 2, todos independentes."""
        basis = standard_basis(3, 2)
        self.assertEqual(len(basis), 44)
        self.assertEqual(evaluation_rank(basis, point_batch(3, 52, 9)), 44)

    def test_default_basis_mode(self):
        """Testa standard_basis(3, 1) sem modo: base O(3) com 10 elementos."""
        basis = standard_basis(3, 1)
        self.assertEqual(len(basis), 10)
        self.assertEqual(basis, standard_basis(3, 1, Mode.ON))

    def test_graded_basis(self):
        """Testa 2k + |λ| = r em cada elemento de ℬ_r."""
        basis = standard_basis(4, 2, Mode.GO)
        self.assertEqual({term.graded_degree for term in basis}, {0, 1, 2})
        self.assertEqual(
            [term.left.size for term in basis if term.gamma_pow == 1], [0]
        )


class BasisSuiteTestCase(TestCase):
    """Testes da suíte de base."""

    def test_orthogonal_suite(self):
        """Testa n=3, r ≤ 2, modo ON: PASS."""
        report = basis_suite(3, 2, Mode.ON, seed=3)
        self.assertTrue(report.passed)
        lines = report.lines()
        self.assertEqual(lines[0], "basis n=3 mode=on coeff=q degrees=0..2 count=44")
        self.assertIn("independence rank=44 expected=44", lines)
        self.assertEqual(lines[-1], "PASS")

    @pytest.mark.slow
    def test_similitude_suite(self):
        """Testa n=4, r ≤ 2, modo GO: listagem de ℬ₂ e PASS."""
        report = basis_suite(4, 2, Mode.GO, seed=5)
        self.assertTrue(report.passed)
        lines = report.lines()
        self.assertIn("degree 2: k=1 shape_size=0 count=1", lines)
        prefix = "degree 2: k=0 shape_size=2"
        self.assertTrue(any(line.startswith(prefix) for line in lines))

    @pytest.mark.slow
    def test_prime_field_suite(self):
        """Testa n=3, r ≤ 2 sobre 𝔽₅ com pontos reduzidos."""
        report = basis_suite(3, 2, Mode.ON, domain=PrimeFieldDomain(5), seed=7)
        self.assertTrue(report.passed)
        self.assertIn("coeff=f5", report.lines()[0])

    def test_cap_exceeded(self):
        """Testa recusa com a contagem acima do limite."""
        with self.assertRaises(CapExceededError) as ctx:
            basis_suite(3, 2, Mode.ON, cap=10)
        self.assertEqual(ctx.exception.count, 44)
