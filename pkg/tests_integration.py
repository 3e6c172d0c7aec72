"""
Testes de integração do orthostraight.

Cobre os critérios de aceitação de ponta a ponta: exemplos trabalhados,
somas de relação, endireitamento completo, certificação da base e o modo
de característica ímpar.
"""

import random
from unittest import TestCase

import pytest

from apps.cli.models import JobConfig
from apps.cli.services import cmd_paper_examples
from apps.core.domains import PrimeFieldDomain, is_dyadic
from apps.gl_straighten.models import Combination
from apps.gl_straighten.services import (
    count_gl_standard_pairs,
    symbolic_poly,
    two_column_straighten,
)
from apps.group_oracle.services import basis_suite, point_batch, verify_on_group
from apps.on_straighten.models import Mode, RelationSpec
from apps.on_straighten.services import on_straighten, verify_relation
from apps.polyring.services import bideterminant
from apps.tableaux.domain.rules import gl_alphabet, is_gl_standard, is_on_standard
from apps.tableaux.models import Tableau
from apps.tableaux.services.queries import (
    enumerate_column_strict,
    partitions_of,
    partitions_up_to,
)
from apps.tableaux.utils import parse_tableau

pytestmark = pytest.mark.integration


def random_column_strict(rng, shape, n):
    letters = gl_alphabet(n)
    return Tableau.from_columns(
        [sorted(rng.sample(letters, length)) for length in shape.conjugate().parts]
    )


def random_relation_spec(rng, n):
    letters = gl_alphabet(n)
    a = rng.randint(1, min(3, len(letters) // 2))
    f = rng.randint(0, min(1, len(letters) - a))
    e = min(f + rng.randint(0, 1), len(letters) - a)
    right = Tableau.from_columns([
        sorted(rng.sample(letters, e + a)),
        sorted(rng.sample(letters, f + a)),
    ])
    return RelationSpec(
        (tuple(rng.sample(letters, e)), tuple(rng.sample(letters, f))),
        right,
        a,
        frozenset(rng.sample(letters, rng.randint(0, a - 1))),
    )


class MeadExampleTestCase(TestCase):
    """Testes do exemplo de duas colunas (identidade simbólica)."""

    def test_symbolic_identity(self):
        """Testa [S:T] = head + drop em ℚ[X]."""
        left, right = parse_tableau("1 1; 2 2b; 3"), parse_tableau("1b 1; 2b 2; 3")
        _, head, drop = two_column_straighten(left, right)

        self.assertEqual(len(head) + len(drop), 5)
        self.assertEqual(symbolic_poly(head + drop, 6), bideterminant(left, right))


class WorkedExamplesTestCase(TestCase):
    """Testes dos exemplos trabalhados OS1, OS2 e OS3."""

    def test_examples_on_points(self):
        """Testa certificados exatos e resíduo nulo em 10 pontos."""
        result = cmd_paper_examples(JobConfig(n=6, points=10))
        self.assertTrue(result.ok, result.output)

    def test_batch_has_minus_component(self):
        """Testa que o lote de 10 pontos tem ao menos 2 com det = −1."""
        for n in (6, 7):
            batch = point_batch(n, 10, JobConfig(n=n).seed)
            negative = sum(1 for point in batch if point.det_value == -1)
            self.assertGreaterEqual(negative, 2)


@pytest.mark.slow
class RelationSuiteTestCase(TestCase):
    """Testes de somas de relação aleatórias com n de 4 a 9."""

    def test_orthogonal_specs(self):
        """Testa LHS = RHS em 50 specs aleatórias."""
        rng = random.Random(42)
        batches = {n: point_batch(n, 10, 100 + n) for n in range(4, 10)}
        for _ in range(50):
            n = rng.randint(4, 9)
            spec = random_relation_spec(rng, n)
            self.assertTrue(verify_relation(spec, batches[n]), spec)

    def test_similitude_specs(self):
        """Testa a versão graduada em GO(n)."""
        rng = random.Random(43)
        batches = {n: point_batch(n, 6, 200 + n, Mode.GO) for n in range(4, 8)}
        for _ in range(15):
            n = rng.randint(4, 7)
            spec = random_relation_spec(rng, n)
            self.assertTrue(verify_relation(spec, batches[n], Mode.GO), spec)


@pytest.mark.slow
class StraighteningSoundnessTestCase(TestCase):
    """Testes de endireitamento completo em pares aleatórios."""

    def test_random_pairs(self):
        """Testa saída padrão, coeficientes em ℤ[1/2] e resíduo nulo."""
        rng = random.Random(2024)
        shapes = [shape for shape in partitions_up_to(4) if shape.size]
        batches = {n: point_batch(n, 10, 300 + n) for n in range(3, 7)}
        checked = 0

        while checked < 100:
            n = rng.randint(3, 6)
            shape = rng.choice(shapes)
            if shape.rows > n:
                continue
            left = random_column_strict(rng, shape, n)
            right = random_column_strict(rng, shape, n)
            result = on_straighten(left, right, n)

            for term in result:
                self.assertTrue(is_on_standard(term.left, n))
                self.assertTrue(is_on_standard(term.right, n))
                self.assertTrue(is_dyadic(term.coef))
            residual = Combination.single(left, right) - result
            context = (left.rows, right.rows, n)
            self.assertTrue(verify_on_group(residual, batches[n]), context)
            checked += 1


@pytest.mark.slow
class BasisCertificationTestCase(TestCase):
    """Testes de certificação da base padrão."""

    def check(self, report):
        self.assertEqual(report.rank, report.count)
        self.assertEqual(report.rank_second, report.count)
        self.assertTrue(report.passed, str(report))

    def test_orthogonal_three(self):
        """Testa O(3) com grau ≤ 3."""
        self.check(basis_suite(3, 3))

    def test_orthogonal_four(self):
        """Testa O(4) com grau ≤ 2."""
        self.check(basis_suite(4, 2))

    def test_similitude_four(self):
        """Testa GO(4) com grau ≤ 2 (135 elementos)."""
        report = basis_suite(4, 2, Mode.GO)
        self.assertEqual(report.count, 135)
        self.check(report)

    def test_odd_characteristic(self):
        """Testa O(3) com grau ≤ 2 sobre 𝔽₅ e 𝔽₇."""
        for p in (5, 7):
            report = basis_suite(3, 2, domain=PrimeFieldDomain(p))
            self.assertEqual(report.count, 44)
            self.check(report)


class GradingTestCase(TestCase):
    """Testes da graduação 2k + |λ| em GO(4)."""

    def test_degree_two(self):
        """Testa que todo termo endireitado tem grau 2."""
        rng = random.Random(8)
        for shape in partitions_of(2):
            for _ in range(3):
                left = random_column_strict(rng, shape, 4)
                right = random_column_strict(rng, shape, 4)
                result = on_straighten(left, right, 4, Mode.GO)
                self.assertEqual({term.graded_degree for term in result} - {2}, set())


class GLCountTestCase(TestCase):
    """Testes da contagem de pares GL-padrão."""

    def test_count_against_brute_force(self):
        """Testa n=2, grau 2: 9 pares de forma (2) mais 1 de forma (1,1)."""
        letters = gl_alphabet(2)
        per_shape = []
        for shape in partitions_of(2, max_rows=2):
            tableaux = enumerate_column_strict(shape, letters)
            per_shape.append(sum(1 for t in tableaux if is_gl_standard(t, 2)) ** 2)
        self.assertEqual(sorted(per_shape), [1, 9])
        self.assertEqual(count_gl_standard_pairs(2, 2), 10)
