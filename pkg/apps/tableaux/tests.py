from unittest import TestCase

from apps.core.exceptions import DomainError, InvalidDimensionError, TableauParseError
from apps.tableaux.domain.rules import (
    alphabet,
    bar,
    basic_tableau,
    box_moves,
    conjugate,
    delete_pair,
    dominance_lt,
    gl_alphabet,
    is_gl_standard,
    on_standard_report,
    shape_order_lt,
    shape_sort_key,
    tableau_prec,
)
from apps.tableaux.models import (
    IndexLetter,
    Ordering,
    Partition,
    Tableau,
    ViolationKind,
)
from apps.tableaux.services.queries import (
    brute_force_on_standard,
    enumerate_gl_standard,
    enumerate_on_standard,
    partitions_of,
    partitions_up_to,
)
from apps.tableaux.utils import format_tableau, parse_letter, parse_shape, parse_tableau


def t(text):
    return parse_tableau(text)


def cols(*columns):
    return Tableau.from_columns([[parse_letter(x) for x in c.split()] for c in columns])


class AlphabetTestCase(TestCase):
    """Testes do alfabeto ordenado e da barra."""

    def test_even_alphabet(self):
        """Testa ℐ(4) = 1̄ < 1 < 2̄ < 2."""
        self.assertEqual([x.label for x in alphabet(4)], ["1b", "1", "2b", "2"])

    def test_odd_alphabet_ends_with_zero(self):
        """Testa que 0 é a maior letra para n ímpar."""
        self.assertEqual([x.label for x in alphabet(5)], ["1b", "1", "2b", "2", "0"])
        self.assertEqual([x.label for x in alphabet(3)], ["1b", "1", "0"])

    def test_small_dimension_rejected(self):
        """Testa erro para n < 3."""
        with self.assertRaises(InvalidDimensionError):
            alphabet(2)
        self.assertEqual(len(gl_alphabet(2)), 2)

    def test_bar_is_involution(self):
        """Testa bar∘bar = id e bar(0) = 0."""
        for n in range(3, 11):
            for letter in alphabet(n):
                self.assertEqual(bar(bar(letter)), letter)
        self.assertEqual(bar(IndexLetter(0)), IndexLetter(0))
        self.assertEqual(bar(parse_letter("2b")), parse_letter("2"))

    def test_positions_follow_order(self):
        """Testa que position(n) é o índice em ℐ(n)."""
        for n in (4, 7):
            for index, letter in enumerate(alphabet(n)):
                self.assertEqual(letter.position(n), index)


class PartitionTestCase(TestCase):
    """Testes de partições e ordens de formas."""

    def test_conjugate(self):
        """Testa a conjugada."""
        self.assertEqual(conjugate(Partition.of(2, 2, 1)), Partition.of(3, 2))
        self.assertEqual(conjugate(Partition.of(4, 1)), Partition.of(2, 1, 1, 1))
        self.assertEqual(conjugate(Partition.of(1)), Partition.of(1))

    def test_conjugate_involution(self):
        """Testa (λ′)′ = λ para |λ| ≤ 12."""
        for shape in partitions_up_to(12):
            self.assertEqual(shape.conjugate().conjugate(), shape)

    def test_dominance_examples(self):
        """Testa os exemplos de dominância."""
        self.assertTrue(dominance_lt(Partition.of(2, 2, 1), Partition.of(4, 1)))
        self.assertFalse(dominance_lt(Partition.of(3, 1), Partition.of(3, 1)))
        self.assertFalse(dominance_lt(Partition.of(3, 1), Partition.of(2, 2)))

    def test_dominance_size_mismatch(self):
        """Testa erro para tamanhos diferentes."""
        with self.assertRaises(DomainError):
            dominance_lt(Partition.of(2), Partition.of(1))

    def test_shape_order_examples(self):
        """Testa a ordem total de formas."""
        self.assertTrue(shape_order_lt(Partition.of(1), Partition.of(2)))
        self.assertTrue(shape_order_lt(Partition.of(2, 2, 1), Partition.of(4, 1)))
        self.assertTrue(shape_order_lt(Partition.of(2, 2), Partition.of(3, 1)))
        self.assertFalse(shape_order_lt(Partition.of(3, 1), Partition.of(2, 2)))

    def test_invalid_partition(self):
        """Testa rejeição de partes crescentes."""
        with self.assertRaises(DomainError):
            Partition.of(1, 2)

    def test_partitions_of_counts(self):
        """Testa p(r) para r pequeno."""
        self.assertEqual(
            [len(partitions_of(r)) for r in range(7)], [1, 1, 2, 3, 5, 7, 11]
        )

    def test_box_moves_decrease_dominance(self):
        """Testa que mover a caixa para coluna anterior desce em dominância."""
        for shape in partitions_up_to(6):
            for moved in box_moves(shape):
                self.assertTrue(dominance_lt(moved, shape), f"{moved} vs {shape}")

    def test_shape_key_matches_order(self):
        """Testa que shape_sort_key realiza shape_order_lt."""
        shapes = partitions_up_to(6)
        for a in shapes:
            for b in shapes:
                expected = shape_sort_key(a) < shape_sort_key(b)
                self.assertEqual(shape_order_lt(a, b), expected)


class TableauOrderTestCase(TestCase):
    """Testes da ordem ≺ e da padronização GL."""

    def test_prec_single_column(self):
        """Testa [1̄,1] ≺ [1̄,2̄]."""
        self.assertEqual(tableau_prec(cols("1b 1"), cols("1b 2b")), Ordering.LT)
        self.assertEqual(tableau_prec(cols("1b 1"), cols("1b 1")), Ordering.EQ)
        self.assertEqual(tableau_prec(cols("1b 2b"), cols("1b 1")), Ordering.GT)

    def test_prec_compares_rightmost_column(self):
        """Testa que a coluna da direita decide."""
        first = cols("1b 2", "1b 1")
        second = cols("1b 1", "1b 2b")
        self.assertEqual(tableau_prec(first, second), Ordering.LT)

    def test_prec_shape_mismatch(self):
        """Testa erro para formas diferentes."""
        with self.assertRaises(DomainError):
            tableau_prec(t("1"), t("1 1"))

    def test_gl_standard_examples(self):
        """Testa os exemplos de GL-padrão."""
        self.assertTrue(is_gl_standard(t("1b 1; 1"), 4))
        self.assertFalse(is_gl_standard(t("1 1b"), 4))
        self.assertFalse(is_gl_standard(t("1b; 1b"), 4))


class ONStandardReportTestCase(TestCase):
    """Testes do relatório O(n)-padrão."""

    def test_protected_tableau_is_standard(self):
        """Testa T = (1,2̄,2 | 2,3) em O(7)."""
        report = on_standard_report(cols("1 2b 2", "2 3"), 7)
        self.assertTrue(report.standard)
        self.assertIsNone(report.primary)

    def test_os1_violation(self):
        """Testa OS1 em i=2 com α₂=3, β₂=2."""
        report = on_standard_report(cols("1b 2b 2", "2b 2"), 6)
        self.assertFalse(report.standard)
        self.assertEqual(report.primary.kind, ViolationKind.OS1)
        self.assertEqual(report.primary.index, 2)
        self.assertEqual(report.alpha[1], 3)
        self.assertEqual(report.beta[1], 2)

    def test_os2_violation(self):
        """Testa o 2 desprotegido na primeira coluna em O(7)."""
        report = on_standard_report(cols("1b 1 2", "2b"), 7)
        self.assertEqual(report.primary.kind, ViolationKind.OS2)
        self.assertEqual(report.primary.index, 2)

    def test_os3_violation_records_column(self):
        """Testa OS3 em i=2 com testemunha na coluna 2."""
        report = on_standard_report(t("1 1; 2b 2; 3"), 6)
        self.assertEqual(report.primary.kind, ViolationKind.OS3)
        self.assertEqual(report.primary.index, 2)
        self.assertEqual(report.primary.column, 2)

    def test_non_gl_input(self):
        """Testa que entrada não GL-padrão gera só a violação GL."""
        report = on_standard_report(t("1 1; 2 2b; 3"), 6)
        self.assertFalse(report.gl_standard)
        self.assertEqual([v.kind for v in report.violations], [ViolationKind.GL])

    def test_column_sum_violation(self):
        """Testa λ′₁+λ′₂ > n."""
        report = on_standard_report(t("1b 1b; 1 1"), 3)
        self.assertEqual(report.primary.kind, ViolationKind.COLSUM)

    def test_standard_implies_gl_standard(self):
        """Testa standard ⇒ GL-padrão em todos os quadros pequenos."""
        for shape in partitions_up_to(3):
            for tableau in brute_force_on_standard(shape, 4):
                self.assertTrue(is_gl_standard(tableau, 4))


class BuildersTestCase(TestCase):
    """Testes de T^λ e da remoção de pares."""

    def test_basic_tableau(self):
        """Testa T^λ."""
        first = basic_tableau(Partition.of(2, 1), 3)
        second = basic_tableau(Partition.of(1, 1, 1), 6)
        self.assertEqual(format_tableau(first), "1b 1b; 1")
        self.assertEqual(format_tableau(second), "1b; 1; 2b")
        self.assertEqual(format_tableau(basic_tableau(Partition.of(1), 5)), "1b")

    def test_basic_tableau_too_many_rows(self):
        """Testa erro para forma alta demais."""
        with self.assertRaises(DomainError):
            basic_tableau(Partition.of(1, 1, 1, 1), 3)

    def test_delete_pair(self):
        """Testa (T,{2̄}) em (1̄,2̄ | 2,3)."""
        result = delete_pair(cols("1b 2b", "2 3"), parse_letter("2b"))
        self.assertEqual(result, cols("1b", "3"))

    def test_delete_pair_all_pairs(self):
        """Testa que (1̄,2̄,3̄ | 1,2,3) admite remover cada par."""
        tableau = cols("1b 2b 3b", "1 2 3")
        for label in ("1b", "2b", "3b"):
            reduced = delete_pair(tableau, parse_letter(label))
            self.assertEqual(reduced.shape, Partition.of(2, 2))

    def test_delete_missing_pair(self):
        """Testa erro quando o par não ocorre."""
        with self.assertRaises(DomainError):
            delete_pair(cols("1b 2b", "2 3"), parse_letter("1b"))


class EnumerationTestCase(TestCase):
    """Testes da enumeração de quadros padrão."""

    def test_single_box(self):
        """Testa λ=(1), n=4."""
        found = [format_tableau(x) for x in enumerate_on_standard(Partition.of(1), 4)]
        self.assertEqual(found, ["1b", "1", "2b", "2"])

    def test_column_condition_empty(self):
        """Testa fluxo vazio quando λ′₁+λ′₂ > n."""
        self.assertEqual(list(enumerate_on_standard(Partition.of(1, 1, 1, 1), 3)), [])

    def test_matches_brute_force(self):
        """Testa enumeração contra filtro por força bruta."""
        for n in (3, 4):
            for shape in partitions_up_to(4):
                fast = list(enumerate_on_standard(shape, n))
                slow = brute_force_on_standard(shape, n)
                self.assertEqual(fast, slow, f"{shape} n={n}")

    def test_gl_count_n2(self):
        """Testa 9 pares de forma (2) e 1 de forma (1,1) para n=2."""
        letters = gl_alphabet(2)
        two = len(enumerate_gl_standard(Partition.of(2), letters))
        one_one = len(enumerate_gl_standard(Partition.of(1, 1), letters))
        self.assertEqual(two * two + one_one * one_one, 10)


class TextFormatTestCase(TestCase):
    """Testes do formato texto."""

    def test_round_trip(self):
        """Testa parse/format."""
        text = "1b 2b; 1 2; 2"
        self.assertEqual(format_tableau(parse_tableau(text)), text)
        self.assertEqual(parse_tableau(text).shape, Partition.of(2, 2, 1))

    def test_empty_tableau(self):
        """Testa '-' como quadro vazio."""
        self.assertEqual(parse_tableau("-"), Tableau.empty())
        self.assertEqual(format_tableau(Tableau.empty()), "-")

    def test_ragged_rejected(self):
        """Testa rejeição de forma irregular."""
        with self.assertRaises(TableauParseError):
            parse_tableau("1; 1 2")

    def test_bad_letters(self):
        """Testa letras inválidas."""
        for token in ("0b", "x", "b"):
            with self.assertRaises(TableauParseError):
                parse_letter(token)

    def test_parse_shape(self):
        """Testa leitura de forma."""
        self.assertEqual(parse_shape("(2,1)"), Partition.of(2, 1))
        self.assertEqual(parse_shape("3"), Partition.of(3))
