import random
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from unittest import TestCase

from apps.core.domains import QQ, PrimeFieldDomain, is_dyadic
from apps.core.exceptions import DomainError
from apps.gl_straighten.models import Combination
from apps.gl_straighten.services import GLStraightener
from apps.group_oracle.services import point_batch, verify_on_group
from apps.on_straighten.models import Mode
from apps.on_straighten.services import (
    ONStraightener,
    fix_os1,
    fix_os2,
    fix_os3,
    get_straightener,
    on_straighten,
    one_column_complement,
    reduce_tall_shape,
)
from apps.polyring.services import evaluate_bideterminant
from apps.tableaux.domain.rules import basic_tableau, gl_alphabet, is_on_standard
from apps.tableaux.models import Partition, Tableau
from apps.tableaux.utils import parse_tableau

OS1_LEFT, OS1_RIGHT = "1b 2b; 2b 2; 2", "1 2; 2b 3; 3b"
OS2_LEFT, OS2_RIGHT = "1b 2b; 1; 2", "1 2; 2b; 2"
OS3_LEFT, OS3_RIGHT = "1 1; 2b 2; 3", "1b 1; 2b 2; 3"
DROP_LEFT = "1 1; 2b; 2; 3"


def t(text):
    return parse_tableau(text)


def combo(terms, domain=QQ):
    combination = Combination(domain)
    for coef, left, right in terms:
        combination.add_term(coef, t(left), t(right))
    return combination


@lru_cache(maxsize=None)
def points(n, count=10, mode=Mode.ON, seed=11):
    return tuple(point_batch(n, count, seed, mode))


def residual(left, right, result):
    return Combination.single(left, right, domain=result.domain) - result


def random_column_strict(rng, shape, n):
    letters = gl_alphabet(n)
    lengths = shape.conjugate().parts
    columns = [sorted(rng.sample(letters, length)) for length in lengths]
    return Tableau.from_columns(columns)


class ModeTestCase(TestCase):
    """Testes do modo e dos valores padrão."""

    def test_parse_member(self):
        """Testa que um membro de Mode é devolvido sem conversão."""
        for mode in Mode:
            self.assertIs(Mode.parse(mode), mode)
        self.assertIs(Mode.parse(" GO "), Mode.GO)

    def test_parse_unknown(self):
        """Testa erro para modo desconhecido."""
        with self.assertRaises(DomainError):
            Mode.parse("sp")

    def test_default_mode_is_on(self):
        """Testa chamadas sem modo iguais às chamadas com Mode.ON."""
        left, right = t(OS1_LEFT), t(OS1_RIGHT)
        self.assertEqual(ONStraightener(6).mode, Mode.ON)
        self.assertEqual(
            on_straighten(left, right, 6), on_straighten(left, right, 6, Mode.ON)
        )
        self.assertEqual(fix_os1(left, right, 2, 6), fix_os1(left, right, 2, 6, "on"))

    def test_default_standard_pair(self):
        """Testa on_straighten(S, T, 4) com todos os padrões."""
        left, right = t("1b 1b; 2b"), t("1b 2; 2b")
        result = on_straighten(left, right, 4)
        self.assertEqual(result, Combination.single(left, right))


class ComplementTestCase(TestCase):
    """Testes do complemento de uma coluna."""

    def check_identity(self, n, length, mode):
        letters = gl_alphabet(n)
        for point in points(n, 3, mode):
            det_inverse = 1 / point.det_value
            for first in combinations(letters, length):
                for second in combinations(letters, length):
                    result = one_column_complement(first, second, n)
                    value = evaluate_bideterminant(
                        Tableau.from_columns([first]), Tableau.from_columns([second]),
                        point.matrix, n,
                    )
                    other = evaluate_bideterminant(
                        result.left, result.right, point.matrix, n
                    )
                    if mode == Mode.GO:
                        factor = point.gamma_value ** length * det_inverse
                    else:
                        factor = point.det_value
                    self.assertEqual(value, result.sign * factor * other)

    def test_identity_on_points(self):
        """Testa [S:T] = ε·det·[S̄′:T̄′] em O(3) e O(4)."""
        self.check_identity(3, 1, Mode.ON)
        self.check_identity(3, 2, Mode.ON)
        self.check_identity(4, 2, Mode.ON)

    def test_identity_on_similitudes(self):
        """Testa [S:T] = ε·γ^k·det⁻¹·[S̄′:T̄′] em GO(4)."""
        self.check_identity(4, 1, Mode.GO)
        self.check_identity(4, 2, Mode.GO)

    def test_full_column(self):
        """Testa coluna com todo ℐ: complemento vazio e sinal +1."""
        letters = tuple(gl_alphabet(3))
        result = one_column_complement(letters, letters, 3)
        self.assertEqual(result.sign, 1)
        self.assertEqual(result.left, Tableau.empty())

    def test_unsorted_input(self):
        """Testa que a coluna fora de ordem troca o sinal."""
        one, bar_one = t("1").entry(1, 1), t("1b").entry(1, 1)
        ordered = one_column_complement((bar_one, one), (bar_one, one), 4)
        swapped = one_column_complement((one, bar_one), (bar_one, one), 4)
        self.assertEqual(swapped.sign, -ordered.sign)
        self.assertEqual(swapped.left, ordered.left)

    def test_repeated_entry(self):
        """Testa erro com entrada repetida."""
        one = t("1").entry(1, 1)
        with self.assertRaises(DomainError):
            one_column_complement((one, one), (one, one), 4)


class ReduceTallShapeTestCase(TestCase):
    """Testes da redução de formas com λ′₁ + λ′₂ > n."""

    def setUp(self):
        """Configuração com forma (2,2,1) em n=3."""
        self.left = t("1b 1b; 1 1; 0")
        self.right = t("1b 1; 1 0; 0")

    def test_on_identity(self):
        """Testa a identidade em pontos de O(3)."""
        result = reduce_tall_shape(self.left, self.right, 3)
        self.assertEqual(len(result), 1)
        term = next(iter(result))
        self.assertEqual(term.left.size, 1)
        self.assertEqual(term.gamma_pow, 0)
        difference = residual(self.left, self.right, result)
        self.assertTrue(verify_on_group(difference, points(3)))

    def test_go_identity(self):
        """Testa γ^{k₁+k₂−n} em pontos de GO(3)."""
        result = reduce_tall_shape(self.left, self.right, 3, Mode.GO)
        self.assertEqual(next(iter(result)).gamma_pow, 2)
        difference = residual(self.left, self.right, result)
        self.assertTrue(verify_on_group(difference, points(3, 10, Mode.GO)))

    def test_short_shape_rejected(self):
        """Testa erro quando k₁ + k₂ ≤ n."""
        with self.assertRaises(DomainError):
            reduce_tall_shape(t("1b 1; 1"), t("1b 1; 0"), 3)

    def test_gl_mode_rejected(self):
        """Testa erro no modo GL."""
        with self.assertRaises(DomainError):
            reduce_tall_shape(self.left, self.right, 3, Mode.GL)


class FixOS1TestCase(TestCase):
    """Testes da correção OS1."""

    def setUp(self):
        """Configuração com o exemplo OS1 em n=6."""
        self.left = t(OS1_LEFT)
        self.right = t(OS1_RIGHT)

    def test_golden_terms(self):
        """Testa os oito termos com sinais exatos."""
        expected = combo([
            (1, "1b 2; 2b 3; 3b", OS1_RIGHT),
            (1, "1b 2; 2b 3b; 3", OS1_RIGHT),
            (1, "1b 2b; 2 3; 3b", OS1_RIGHT),
            (1, "1b 2b; 2 3b; 3", OS1_RIGHT),
            (-1, "1b 3b; 3b 3; 3", OS1_RIGHT),
            (1, "1b 1b; 1", "1 3; 3b"),
            (1, "1b 1b; 1", "1 2; 2b"),
            (-1, "1b", "1"),
        ])
        self.assertEqual(fix_os1(self.left, self.right, 2, 6), expected)

    def test_identity_on_points(self):
        """Testa a identidade em 10 pontos de O(6)."""
        result = fix_os1(self.left, self.right, 2, 6)
        group = points(6)
        self.assertGreaterEqual(sum(1 for p in group if p.det_value == -1), 2)
        self.assertTrue(verify_on_group(residual(self.left, self.right, result), group))

    def test_go_identity(self):
        """Testa a versão com pesos γ^d em GO(6)."""
        result = fix_os1(self.left, self.right, 2, 6, Mode.GO)
        self.assertEqual(
            {term.gamma_pow for term in result if term.left.size == 1}, {2}
        )
        difference = residual(self.left, self.right, result)
        self.assertTrue(verify_on_group(difference, points(6, 6, Mode.GO)))

    def test_head_independent_of_right(self):
        """Testa que a parte de forma λ não depende de T."""
        other = t("1b 1b; 1 1; 2b")
        shape = self.left.shape
        first = fix_os1(self.left, self.right, 2, 6).of_shape(shape)
        second = fix_os1(self.left, other, 2, 6).of_shape(shape)
        self.assertEqual(
            Counter((term.left, term.coef) for term in first),
            Counter((term.left, term.coef) for term in second),
        )

    def test_lower_terms_for_basic_right(self):
        """Testa que T = T^λ contém pares i, ī e gera termos de forma menor."""
        right = basic_tableau(self.left.shape, 6)
        result = fix_os1(self.left, right, 2, 6)
        lower = result - result.of_shape(self.left.shape)

        self.assertFalse(lower.is_zero)
        self.assertEqual(len(lower), 3)
        self.assertTrue(all(term.left.size < self.left.size for term in lower))
        self.assertTrue(verify_on_group(residual(self.left, right, result), points(6)))

    def test_no_lower_terms_without_pairs(self):
        """Testa T sem pares i, ī: só termos de forma λ."""
        right = t("1 2; 2 3; 3")
        result = fix_os1(self.left, right, 2, 6)

        self.assertTrue((result - result.of_shape(self.left.shape)).is_zero)
        self.assertTrue(verify_on_group(residual(self.left, right, result), points(6)))

    def test_wrong_index(self):
        """Testa erro quando não há OS1 no índice dado."""
        with self.assertRaises(DomainError):
            fix_os1(self.left, self.right, 1, 6)

    def test_gl_mode_rejected(self):
        """Testa erro no modo GL."""
        with self.assertRaises(DomainError):
            fix_os1(self.left, self.right, 2, 6, Mode.GL)


class FixOS2TestCase(TestCase):
    """Testes da correção OS2."""

    def setUp(self):
        """Configuração com o exemplo OS2 em n=7."""
        self.left = t(OS2_LEFT)
        self.right = t(OS2_RIGHT)

    def test_golden_terms(self):
        """Testa os cinco termos, todos com sinal −."""
        expected = combo([
            (-1, "1b 2; 1; 2b", OS2_RIGHT),
            (-1, "1b 3; 1; 3b", OS2_RIGHT),
            (-1, "1b 3b; 1; 3", OS2_RIGHT),
            (-1, "1b 0; 1; 0", OS2_RIGHT),
            (-1, "1b; 1", "1; 2"),
        ])
        self.assertEqual(fix_os2(self.left, self.right, 2, 7), expected)

    def test_identity_on_points(self):
        """Testa a identidade em 10 pontos de O(7)."""
        result = fix_os2(self.left, self.right, 2, 7)
        difference = residual(self.left, self.right, result)
        self.assertTrue(verify_on_group(difference, points(7)))

    def test_wrong_kind(self):
        """Testa erro ao pedir OS1 num quadro com OS2."""
        with self.assertRaises(DomainError):
            fix_os1(self.left, self.right, 2, 7)


class FixOS3TestCase(TestCase):
    """Testes da correção OS3."""

    def setUp(self):
        """Configuração com o exemplo OS3 em n=6."""
        self.left = t(OS3_LEFT)
        self.right = t(OS3_RIGHT)

    def test_golden_terms(self):
        """Testa os sete termos com coeficiente ±½."""
        half = Fraction(1, 2)
        expected = combo([
            (half, "1 1; 2b 3; 2", OS3_RIGHT),
            (-half, "1 1; 3b 3; 3", OS3_RIGHT),
            (half, "1 1; 3", "2b 2; 3"),
            (half, "1 1; 3", "1b 1; 3"),
            (half, DROP_LEFT, "1 1b; 2b; 2; 3"),
            (half, DROP_LEFT, "1b 2b; 1; 2; 3"),
            (half, DROP_LEFT, "1b 3; 1; 2b; 2"),
        ])
        self.assertEqual(fix_os3(self.left, self.right, 2, 6), expected)

    def test_identity_on_points(self):
        """Testa a identidade em 10 pontos de O(6)."""
        result = fix_os3(self.left, self.right, 2, 6)
        difference = residual(self.left, self.right, result)
        self.assertTrue(verify_on_group(difference, points(6)))

    def test_prime_field(self):
        """Testa ½ em 𝔽₅: mesmos termos, coeficientes reduzidos."""
        domain = PrimeFieldDomain(5)
        result = fix_os3(self.left, self.right, 2, 6, domain=domain)
        self.assertEqual(len(result), 7)
        coefficient = result.coefficient(t("1 1; 2b 3; 2"), self.right)
        self.assertEqual(coefficient, domain.half())


class ONStraightenTestCase(TestCase):
    """Testes do endireitamento O(n) completo."""

    def check_sound(self, left, right, n, result, mode=Mode.ON):
        for term in result:
            self.assertTrue(is_on_standard(term.left, n), term.left.rows)
            self.assertTrue(is_on_standard(term.right, n), term.right.rows)
            self.assertTrue(is_dyadic(term.coef))
        group = points(n, 10, mode)
        self.assertTrue(verify_on_group(residual(left, right, result), group))

    def test_standard_pair(self):
        """Testa par O(n)-padrão → um termo com coeficiente 1."""
        left, right = t("1b 1b; 2b"), t("1b 2; 2b")
        result = on_straighten(left, right, 4)
        self.assertEqual(len(result), 1)
        self.assertEqual(result.coefficient(left, right), 1)

    def test_golden_pairs_fully_recursed(self):
        """Testa os três exemplos até a forma padrão."""
        for left, right, n in (
            (OS1_LEFT, OS1_RIGHT, 6),
            (OS2_LEFT, OS2_RIGHT, 7),
            (OS3_LEFT, OS3_RIGHT, 6),
        ):
            left, right = t(left), t(right)
            self.check_sound(left, right, n, on_straighten(left, right, n))

    def test_column_condition_shape(self):
        """Testa λ=(2,2) em n=3: passa pela redução por complemento."""
        steps = []
        left, right = t("1b 1b; 1 0"), t("1b 1; 1 0")
        result = ONStraightener(3, trace=steps.append).straighten(left, right)
        self.assertIn("COLSUM", [step.kind for step in steps])
        self.check_sound(left, right, 3, result)

    def test_random_pairs(self):
        """Testa saída padrão e resíduo nulo em pares aleatórios."""
        rng = random.Random(5)
        shapes = [
            Partition.of(1, 1),
            Partition.of(2, 1),
            Partition.of(2, 2),
            Partition.of(2, 1, 1),
        ]
        for n in (3, 4):
            for _ in range(6):
                shape = rng.choice(shapes)
                if shape.rows > n:
                    continue
                left = random_column_strict(rng, shape, n)
                right = random_column_strict(rng, shape, n)
                self.check_sound(left, right, n, on_straighten(left, right, n))

    def test_go_grading(self):
        """Testa 2k + |λ| constante no modo GO."""
        left, right = t(OS1_LEFT), t(OS1_RIGHT)
        result = on_straighten(left, right, 6, Mode.GO)
        self.assertEqual({term.graded_degree for term in result}, {left.size})
        self.check_sound(left, right, 6, result, Mode.GO)

    def test_trace_reports_relation_sum(self):
        """Testa que a correção OS1 emite RELSUM antes do passo OS1."""
        steps = []
        ONStraightener(6, trace=steps.append).straighten(t(OS1_LEFT), t(OS1_RIGHT))
        kinds = [step.kind for step in steps]
        self.assertEqual(kinds[:2], ["RELSUM", "OS1"])
        self.assertEqual(steps[1].witness, 2)

    def test_gl_mode_rejected(self):
        """Testa erro ao criar o motor O(n) no modo GL."""
        with self.assertRaises(DomainError):
            ONStraightener(6, mode=Mode.GL)


class FactoryTestCase(TestCase):
    """Testes da factory do motor."""

    def test_gl_engine(self):
        """Testa modo gl → GLStraightener."""
        engine = get_straightener(n=3, mode="gl", domain=QQ)
        self.assertIs(type(engine), GLStraightener)

    def test_on_engine_reads_caps(self):
        """Testa limites padrão vindos de settings."""
        from config import settings

        engine = get_straightener(n=4, mode="go", domain=QQ)
        self.assertIsInstance(engine, ONStraightener)
        self.assertEqual(engine.mode, Mode.GO)
        self.assertEqual(engine.max_terms, settings.STRAIGHTEN_MAX_TERMS)
        self.assertEqual(engine.fuel, settings.STRAIGHTEN_FUEL)

    def test_explicit_caps(self):
        """Testa limites passados explicitamente."""
        engine = get_straightener(n=4, mode=Mode.ON, max_terms=7, fuel=9)
        self.assertEqual((engine.max_terms, engine.fuel), (7, 9))
