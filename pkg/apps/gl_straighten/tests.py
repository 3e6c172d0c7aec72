import random
from collections import Counter
from unittest import TestCase

from apps.core.domains import QQ
from apps.core.exceptions import CapExceededError, DomainError, StraighteningError
from apps.gl_straighten.domain.rules import normalize_pair, sort_columns
from apps.gl_straighten.models import Combination
from apps.gl_straighten.services import (
    GLStraightener,
    count_gl_standard_pairs,
    format_certificate,
    gl_straighten,
    one_switch_expand,
    parse_certificate,
    symbolic_poly,
    two_column_straighten,
)
from apps.polyring.services import bideterminant
from apps.tableaux.domain.rules import basic_tableau, gl_alphabet, is_gl_standard
from apps.tableaux.models import Partition, Tableau
from apps.tableaux.utils import parse_letter, parse_tableau

EXAMPLE_LEFT = "1 1; 2 2b; 3"
EXAMPLE_RIGHT = "1b 1; 2b 2; 3"
DROP_LEFT = "1 1; 2b; 2; 3"


def t(text):
    return parse_tableau(text)


def random_tableau(rng, shape, n):
    letters = gl_alphabet(n)
    rows = (tuple(rng.choice(letters) for _ in range(part)) for part in shape.parts)
    return Tableau(tuple(rows))


class SortColumnsTestCase(TestCase):
    """Testes da ordenação de colunas com sinal."""

    def test_already_sorted(self):
        """Testa sinal +1 sem mudança."""
        sign, left, right = sort_columns(t("1b 1; 2"), t("1 1; 2b"))
        self.assertEqual(sign, 1)
        self.assertEqual(left, t("1b 1; 2"))

    def test_single_swap(self):
        """Testa coluna (2, 1̄) → (1̄, 2) com sinal −1."""
        sign, left, _ = sort_columns(t("2; 1b"), t("1; 2"))
        self.assertEqual(sign, -1)
        self.assertEqual(left, t("1b; 2"))

    def test_repeated_entry(self):
        """Testa coluna (1, 1) → sinal 0."""
        sign, left, right = sort_columns(t("1; 1"), t("1b; 2"))
        self.assertEqual(sign, 0)
        self.assertIsNone(left)
        self.assertIsNone(right)

    def test_normalize_swaps_ragged_columns(self):
        """Testa reordenação de colunas por comprimento."""
        one = parse_letter("1")
        sign, left, right = normalize_pair(
            [[one], [parse_letter("2b"), parse_letter("1b")]],
            [[one], [parse_letter("1b"), parse_letter("2")]],
        )
        self.assertEqual(sign, -1)
        self.assertEqual(left, t("1b 1; 2b"))
        self.assertEqual(right, t("1b 1; 2"))


class TwoColumnTestCase(TestCase):
    """Testes da expansão de Mead em duas colunas."""

    def setUp(self):
        """Configuração com o par do exemplo."""
        self.left = t(EXAMPLE_LEFT)
        self.right = t(EXAMPLE_RIGHT)

    def test_example_head(self):
        """Testa os dois termos de forma (2,2,1)."""
        row, head, _ = two_column_straighten(self.left, self.right)
        self.assertEqual(row, 2)
        self.assertEqual(len(head), 2)
        self.assertEqual(head.coefficient(t("1 1; 2b 2; 3"), self.right), 1)
        self.assertEqual(head.coefficient(t("1 1; 2b 3; 2"), self.right), -1)

    def test_example_drop(self):
        """Testa os três termos de forma (2,1,1,1)."""
        _, _, drop = two_column_straighten(self.left, self.right)
        v = t(DROP_LEFT)
        self.assertEqual(len(drop), 3)
        self.assertEqual(drop.coefficient(v, t("1 1b; 2b; 2; 3")), -1)
        self.assertEqual(drop.coefficient(v, t("1b 2b; 1; 2; 3")), -1)
        self.assertEqual(drop.coefficient(v, t("1b 3; 1; 2b; 2")), -1)

    def test_symbolic_identity(self):
        """Testa [S:T] = head + drop no anel de polinômios."""
        _, head, drop = two_column_straighten(self.left, self.right)
        expected = bideterminant(self.left, self.right)
        self.assertEqual(symbolic_poly(head + drop, 6), expected)

    def test_basic_right_tableau_has_no_drop(self):
        """Testa drop = 0 quando T = T^λ."""
        basic = basic_tableau(self.left.shape, 6)
        _, head, drop = two_column_straighten(self.left, basic)
        self.assertTrue(drop.is_zero)
        self.assertEqual(len(head), 2)

    def test_head_independent_of_right(self):
        """Testa que U e a_U não dependem de T."""
        other = t("1b 2b; 1 2; 3")
        _, head_a, _ = two_column_straighten(self.left, self.right)
        _, head_b, _ = two_column_straighten(self.left, other)
        self.assertEqual(
            Counter((term.left, term.coef) for term in head_a),
            Counter((term.left, term.coef) for term in head_b),
        )

    def test_middle_row_violation(self):
        """Testa violação na linha 2 de colunas de tamanho 3."""
        left = t("1b 1b; 2 1; 3 2")
        right = t("1b 1; 1 2b; 2 2")
        _, head, drop = two_column_straighten(left, right)
        self.assertEqual(symbolic_poly(head + drop, 6), bideterminant(left, right))

    def test_standard_input_rejected(self):
        """Testa erro para S já GL-padrão."""
        with self.assertRaises(DomainError):
            two_column_straighten(t("1 1; 2b 2; 3"), self.right)


class OneSwitchTestCase(TestCase):
    """Testes de [S*:T] − [S:T]."""

    def test_example_switch(self):
        """Testa a troca da linha 2 de `1 1; 2b 2; 3`."""
        left = t("1 1; 2b 2; 3")
        right = t(EXAMPLE_RIGHT)
        expansion = one_switch_expand(left, right, 2)
        star = t(EXAMPLE_LEFT)
        self.assertEqual(
            symbolic_poly(expansion, 6),
            bideterminant(star, right) - bideterminant(left, right),
        )
        self.assertEqual(expansion.coefficient(left, right), 0)
        self.assertEqual(expansion.coefficient(t("1 1; 2b 3; 2"), right), -1)

    def test_requires_pair(self):
        """Testa erro sem o par ī, i na linha."""
        with self.assertRaises(DomainError):
            one_switch_expand(t("1 1; 2b 2; 3"), t(EXAMPLE_RIGHT), 1)


class GLStraightenTestCase(TestCase):
    """Testes do endireitamento GL completo."""

    def test_standard_pair(self):
        """Testa par padrão → um termo com coeficiente 1."""
        left, right = t("1b 1; 2b"), t("1 2; 2b")
        result = gl_straighten(left, right, 4)
        self.assertEqual(len(result), 1)
        self.assertEqual(result.coefficient(left, right), 1)

    def test_example_pair(self):
        """Testa o par do exemplo: saída padrão e identidade simbólica."""
        left, right = t(EXAMPLE_LEFT), t(EXAMPLE_RIGHT)
        result = gl_straighten(left, right, 6)
        for term in result:
            self.assertTrue(is_gl_standard(term.left, 6))
            self.assertTrue(is_gl_standard(term.right, 6))
            self.assertEqual(term.coef.denominator, 1)
        self.assertEqual(symbolic_poly(result, 6), bideterminant(left, right))

    def test_random_pairs(self):
        """Testa identidade simbólica exata em pares aleatórios."""
        rng = random.Random(7)
        shapes = [
            Partition.of(2, 1),
            Partition.of(2, 2),
            Partition.of(2, 1, 1),
            Partition.of(3, 1),
        ]
        for n in (3, 4):
            for _ in range(10):
                shape = rng.choice(shapes)
                left = random_tableau(rng, shape, n)
                right = random_tableau(rng, shape, n)
                result = gl_straighten(left, right, n)
                for term in result:
                    self.assertTrue(is_gl_standard(term.left, n))
                    self.assertTrue(is_gl_standard(term.right, n))
                self.assertEqual(symbolic_poly(result, n), bideterminant(left, right))

    def test_too_many_rows(self):
        """Testa erro para mais de n linhas."""
        with self.assertRaises(DomainError):
            gl_straighten(t("1b; 1; 2b"), t("1b; 1; 2b"), 2)

    def test_cap_exceeded(self):
        """Testa recusa com limite de termos."""
        with self.assertRaises(CapExceededError) as ctx:
            gl_straighten(t(EXAMPLE_LEFT), t(EXAMPLE_RIGHT), 6, max_terms=1)
        self.assertEqual(ctx.exception.cap, 1)

    def test_fuel_exhausted(self):
        """Testa erro com combustível zero."""
        with self.assertRaises(StraighteningError):
            gl_straighten(t(EXAMPLE_LEFT), t(EXAMPLE_RIGHT), 6, fuel=0)

    def test_trace_callback(self):
        """Testa que cada passo GL é reportado."""
        steps = []
        engine = GLStraightener(6, trace=steps.append)
        engine.straighten(t(EXAMPLE_LEFT), t(EXAMPLE_RIGHT))
        self.assertTrue(steps)
        self.assertEqual(steps[0].kind, "GL")
        self.assertEqual(steps[0].witness, 2)

    def test_cache_gives_same_result(self):
        """Testa que o cache não altera resultados."""
        engine = GLStraightener(6)
        first = engine.straighten(t(EXAMPLE_LEFT), t(EXAMPLE_RIGHT))
        second = engine.straighten(t(EXAMPLE_LEFT), t(EXAMPLE_RIGHT))
        self.assertEqual(first, second)


class CertificateTestCase(TestCase):
    """Testes do formato de certificado."""

    def test_round_trip(self):
        """Testa parse(format(x)) = x."""
        result = gl_straighten(t(EXAMPLE_LEFT), t(EXAMPLE_RIGHT), 6)
        self.assertEqual(parse_certificate(format_certificate(result), QQ), result)

    def test_line_format(self):
        """Testa uma linha por termo, separada por tabulação."""
        combination = Combination.single(t("1b"), t("1"), coef=-1)
        self.assertEqual(format_certificate(combination), "-1\t0\t1b\t1")

    def test_gl_pair_count(self):
        """Testa 10 pares padrão de grau 2 para n=2."""
        self.assertEqual(count_gl_standard_pairs(2, 2), 10)
