"""
Testes abrangentes de propriedades.

Varreduras exaustivas das ordens e predicados de quadros e checagens de
avaliação nos pontos de grupo das fixtures do conftest.
"""

import random
from itertools import combinations

import pytest

from apps.core.domains import PrimeFieldDomain
from apps.gl_straighten.models import Combination
from apps.group_oracle.services import evaluate_on_point, point_batch, verify_on_group
from apps.on_straighten.models import Mode
from apps.on_straighten.services import on_straighten, one_column_complement
from apps.polyring.services import (
    det_poly,
    evaluate,
    evaluate_bideterminant,
    gamma_poly,
)
from apps.tableaux.domain.rules import (
    alphabet,
    bar,
    box_moves,
    dominance_lt,
    gl_alphabet,
    is_gl_standard,
    on_standard_report,
    shape_order_lt,
    tableau_prec,
)
from apps.tableaux.models import Ordering, Partition, Tableau
from apps.tableaux.services.queries import (
    brute_force_on_standard,
    enumerate_column_strict,
    enumerate_on_standard,
    partitions_of,
    partitions_up_to,
)


# ================================================================
# ORDENS E PARTIÇÕES
# ================================================================

@pytest.mark.unit
@pytest.mark.parametrize("n", range(3, 11))
def test_bar_is_involution(n):
    """Testa bar∘bar = identidade em ℐ(n)."""
    for letter in alphabet(n):
        assert bar(bar(letter)) == letter


@pytest.mark.unit
def test_conjugate_involution():
    """Testa (λ′)′ = λ para |λ| ≤ 12."""
    for shape in partitions_up_to(12):
        assert shape.conjugate().conjugate() == shape


@pytest.mark.unit
@pytest.mark.parametrize("size", range(1, 9))
def test_dominance_is_strict_partial_order(size):
    """Testa irreflexividade e transitividade de ⊲."""
    shapes = partitions_of(size)
    for first in shapes:
        assert not dominance_lt(first, first)
        for second in shapes:
            if not dominance_lt(first, second):
                continue
            assert not dominance_lt(second, first)
            for third in shapes:
                if dominance_lt(second, third):
                    assert dominance_lt(first, third)


@pytest.mark.unit
def test_shape_order_is_total_refinement():
    """Testa que a ordem de formas é total e refina tamanho e dominância."""
    shapes = partitions_up_to(8)
    for first in shapes:
        for second in shapes:
            if first == second:
                assert not shape_order_lt(first, second)
                continue
            assert shape_order_lt(first, second) != shape_order_lt(second, first)
            if first.size < second.size:
                assert shape_order_lt(first, second)
            elif first.size == second.size and dominance_lt(first, second):
                assert shape_order_lt(first, second)


@pytest.mark.unit
def test_tableau_prec_is_total():
    """Testa ≺ como ordem total estrita na forma (2,2) com n=4."""
    tableaux = enumerate_column_strict(Partition.of(2, 2), gl_alphabet(4))
    assert len(tableaux) == 36

    opposite = {Ordering.LT: Ordering.GT, Ordering.GT: Ordering.LT}
    for first, second in combinations(tableaux, 2):
        result = tableau_prec(first, second)
        assert result in opposite
        assert tableau_prec(second, first) == opposite[result]

    # enumerate_column_strict devolve a lista já em ordem ≺
    for first, second in zip(tableaux, tableaux[1:]):
        assert tableau_prec(first, second) == Ordering.LT


@pytest.mark.unit
def test_box_moves_go_down_in_dominance():
    """Testa μ ⊲ λ para toda caixa movida a uma coluna anterior, |λ| ≤ 6."""
    for shape in partitions_up_to(6):
        for moved in box_moves(shape):
            assert dominance_lt(moved, shape)


# ================================================================
# PREDICADOS PADRÃO
# ================================================================

@pytest.mark.parametrize("n", (3, 4, 5))
def test_on_standard_implies_gl_standard(n):
    """Testa O(n)-padrão ⇒ GL-padrão em formas com |λ| ≤ 4."""
    for shape in partitions_up_to(4, max_rows=n):
        for tableau in enumerate_column_strict(shape, gl_alphabet(n)):
            if on_standard_report(tableau, n).standard:
                assert is_gl_standard(tableau, n)


@pytest.mark.slow
@pytest.mark.parametrize("n", (3, 4, 5, 6))
def test_enumeration_matches_brute_force(n):
    """Testa enumerate_on_standard contra filtragem por força bruta, |λ| ≤ 5."""
    for shape in partitions_up_to(5):
        expected = brute_force_on_standard(shape, n)
        assert list(enumerate_on_standard(shape, n)) == expected


# ================================================================
# PONTOS DE GRUPO
# ================================================================

@pytest.mark.parametrize("n", range(3, 8))
def test_orthogonal_points(on_points, n):
    """Testa det(g) = ±1 e γ(g) = 1 nos pontos de O(n)."""
    det, gamma = det_poly(n), gamma_poly(n)
    signs = set()
    for point in on_points[n]:
        assert evaluate(det, point.matrix, n) == point.det_value
        assert evaluate(gamma, point.matrix, n) == 1
        signs.add(point.det_value)
    assert signs == {1, -1}


@pytest.mark.parametrize("n", range(3, 8))
def test_similitude_multiplier(go_points, n):
    """Testa γ(g) = multiplicador e det² = γⁿ nos pontos de GO(n)."""
    gamma = gamma_poly(n)
    for point in go_points[n]:
        assert evaluate(gamma, point.matrix, n) == point.gamma_value
        assert point.det_value ** 2 == point.gamma_value ** n


@pytest.mark.parametrize("n", (3, 4, 5))
def test_complement_on_orthogonal_points(on_points, n):
    """Testa [S:T] = ε·det·[S̄′:T̄′] para colunas de tamanho 1 e 2."""
    letters = gl_alphabet(n)
    for point in on_points[n][:3]:
        for length in (1, 2):
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
                    assert value == result.sign * point.det_value * other


def test_prime_field_straightening(f5):
    """Testa endireitamento sobre 𝔽₅ certificado em pontos reduzidos."""
    left = Tableau.from_columns([[letter] for letter in gl_alphabet(4)[:2]][::-1])
    right = Tableau.from_columns([[gl_alphabet(4)[0]], [gl_alphabet(4)[1]]])
    result = on_straighten(left, right, 4, domain=f5)
    residual = Combination.single(left, right, domain=f5) - result

    reduced = point_batch(4, 6, 7, Mode.ON, f5)
    assert all(point.domain == f5 for point in reduced)
    assert verify_on_group(residual, reduced)


@pytest.mark.slow
def test_random_straightening_on_similitudes(go_points):
    """Testa resíduo nulo em GO(n) para pares aleatórios de duas caixas."""
    rng = random.Random(99)
    for n in (3, 4, 5):
        letters = gl_alphabet(n)
        for shape in (Partition.of(2), Partition.of(1, 1)):
            for _ in range(4):
                lengths = shape.conjugate().parts
                columns = [sorted(rng.sample(letters, k)) for k in lengths]
                left = Tableau.from_columns(columns)
                columns = [sorted(rng.sample(letters, k)) for k in lengths]
                right = Tableau.from_columns(columns)

                result = on_straighten(left, right, n, Mode.GO)
                residual = Combination.single(left, right) - result
                assert all(
                    evaluate_on_point(residual, point) == 0 for point in go_points[n]
                )


def test_prime_field_fixture(f5):
    """Testa ½ em 𝔽₅."""
    assert f5.half() == f5.convert(3)
    assert f5 == PrimeFieldDomain(5)
