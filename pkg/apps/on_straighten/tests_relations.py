import random
from unittest import TestCase

import pytest

from apps.core.exceptions import DomainError
from apps.group_oracle.services import point_batch, verify_on_group
from apps.on_straighten.models import Mode, RelationSpec
from apps.on_straighten.services import relation_lhs, relation_rhs, verify_relation
from apps.tableaux.domain.rules import gl_alphabet
from apps.tableaux.models import Tableau
from apps.tableaux.utils import parse_letter, parse_tableau


def letters(text):
    return tuple(parse_letter(item) for item in text.split())


def random_spec(rng, n):
    alphabet = gl_alphabet(n)
    a = rng.randint(1, 2)
    f = rng.randint(0, 1)
    e = f + rng.randint(0, 1)
    right = Tableau.from_columns([
        sorted(rng.sample(alphabet, e + a)),
        sorted(rng.sample(alphabet, f + a)),
    ])
    return RelationSpec(
        (tuple(rng.sample(alphabet, e)), tuple(rng.sample(alphabet, f))),
        right,
        a,
        frozenset(rng.sample(alphabet, rng.randint(0, a - 1))),
    )


class ContractionTestCase(TestCase):
    """Testes de Σ_i [i ī : j k] = δ_{j k̄}."""

    def spec(self, right):
        return RelationSpec(((), ()), parse_tableau(right), 1)

    def test_paired_right_side(self):
        """Testa T com j = k̄: um único termo vazio."""
        combination = relation_rhs(self.spec("1b 1"), 4).to_combination()
        self.assertEqual(len(combination), 1)
        self.assertEqual(combination.coefficient(Tableau.empty(), Tableau.empty()), 1)

    def test_unpaired_right_side(self):
        """Testa T sem par: lado direito nulo."""
        self.assertTrue(relation_rhs(self.spec("1b 2"), 4).to_combination().is_zero)

    def test_identity_on_points(self):
        """Testa LHS = RHS em O(4) para todos os j, k."""
        group = point_batch(4, 4, 3)
        for j in gl_alphabet(4):
            for k in gl_alphabet(4):
                spec = RelationSpec(((), ()), Tableau.from_columns([[j], [k]]), 1)
                self.assertTrue(verify_relation(spec, group))

    def test_similitude_weight(self):
        """Testa o peso γ no modo GO."""
        spec = self.spec("1b 1")
        combination = relation_rhs(spec, 4).to_combination(mode=Mode.GO)
        empty = Tableau.empty()
        self.assertEqual(combination.coefficient(empty, empty, 1), 1)
        self.assertTrue(verify_relation(spec, point_batch(4, 4, 3, Mode.GO), Mode.GO))

    def test_similitude_point_rejected_in_on_mode(self):
        """Testa erro ao usar ponto com γ ≠ 1 no modo ON."""
        with self.assertRaises(DomainError):
            verify_relation(self.spec("1b 1"), point_batch(4, 2, 3, Mode.GO), Mode.ON)


class VanishingTestCase(TestCase):
    """Testes da soma sem pares em T."""

    def test_sum_vanishes(self):
        """Testa Σ_i [(i, ī) sobre S₀ : T] = 0 quando T não tem pares."""
        right = parse_tableau("1b 1b; 2b 2b")
        spec = RelationSpec((letters("1b"), letters("2")), right, 1)
        self.assertFalse(relation_rhs(spec, 5).terms)
        lhs = relation_lhs(spec, 5)
        self.assertFalse(lhs.is_zero)
        self.assertTrue(verify_on_group(lhs, point_batch(5, 4, 9)))


class RelationSpecTestCase(TestCase):
    """Testes de validação de RelationSpec."""

    def test_excluded_too_large(self):
        """Testa erro com |C| ≥ a."""
        with self.assertRaises(DomainError):
            RelationSpec(((), ()), parse_tableau("1b 1"), 1, frozenset(letters("2")))

    def test_a_above_second_column(self):
        """Testa erro com a > |T₂|."""
        with self.assertRaises(DomainError):
            RelationSpec((letters("1"), ()), parse_tableau("1b 1; 2"), 2)

    def test_length_mismatch(self):
        """Testa erro quando S₀ empilhado não tem o comprimento de T."""
        with self.assertRaises(DomainError):
            RelationSpec(((), ()), parse_tableau("1b 1; 2"), 1)


class WorkedExampleTestCase(TestCase):
    """Testes do exemplo a=3, C={4̄, 5} (letras até 9, n=18)."""

    def setUp(self):
        """Configuração com S₀ = (7, 9 | 8) e T de cinco linhas."""
        self.spec = RelationSpec(
            (letters("7 9"), letters("8")),
            parse_tableau("1b 1; 2b 2; 3b 3; 4 5; 6"),
            3,
            frozenset(letters("4b 5")),
        )

    def test_term_counts(self):
        """Testa 3 termos em 𝒮₁, 6 em 𝒮₂ e 1 em 𝒮₃."""
        expansion = relation_rhs(self.spec, 18)
        self.assertEqual(
            [len(expansion.by_degree(d)) for d in (1, 2, 3)], [3, 6, 1]
        )

    def test_first_degree_left_side(self):
        """Testa que 𝒮₁ empilha os dois pares de C sobre S₀."""
        for term in relation_rhs(self.spec, 18).by_degree(1):
            expected = (letters("4b 5 7 9"), letters("4 5b 8"))
            self.assertEqual(term.left_columns, expected)

    @pytest.mark.slow
    def test_identity_on_points(self):
        """Testa LHS = Σ 𝒮_d em três pontos de O(18)."""
        self.assertTrue(verify_relation(self.spec, point_batch(18, 3, 1)))


class RandomRelationTestCase(TestCase):
    """Testes de somas de relação aleatórias."""

    def test_random_specs(self):
        """Testa LHS = RHS em specs aleatórias com n de 4 a 6."""
        rng = random.Random(13)
        for _ in range(12):
            n = rng.randint(4, 6)
            spec = random_spec(rng, n)
            batch = point_batch(n, 4, rng.randrange(1000))
            self.assertTrue(verify_relation(spec, batch))

    def test_random_specs_on_similitudes(self):
        """Testa a versão com pesos γ^d em GO(n)."""
        rng = random.Random(17)
        for _ in range(6):
            n = rng.randint(4, 5)
            spec = random_spec(rng, n)
            group = point_batch(n, 3, rng.randrange(1000), Mode.GO)
            self.assertTrue(verify_relation(spec, group, Mode.GO))
