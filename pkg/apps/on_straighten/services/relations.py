"""
Somas de relação: Σ_u [(u, ū) empilhado sobre S₀ : T] = Σ_d 𝒮_d no grupo.

Regras gerais:
- O lado esquerdo percorre as a-uplas crescentes de ℐ − C
- O lado direito é montado termo a termo com o sinal (−1)^{a−d}·ε_E
- A identidade vale em O(n) (γ = 1) e, com o peso γ^d, em GO(n)
"""

import logging
from itertools import combinations

from apps.core.domains import QQ
from apps.core.exceptions import DomainError
from apps.gl_straighten.domain.rules import normalize_pair
from apps.gl_straighten.models import Combination
from apps.gl_straighten.services.queries import evaluate_combination
from apps.on_straighten.domain.rules import delete_letters, deletion_sign, pairs_in
from apps.on_straighten.models import Mode, RelationSpec, SdExpansion, SdTerm
from apps.tableaux.domain.rules import alphabet
from apps.tableaux.models import Tableau

logger = logging.getLogger("apps.on_straighten")


def _bars(letters) -> tuple:
    return tuple(letter.bar() for letter in letters)


def relation_lhs(spec: RelationSpec, n: int, domain=QQ) -> Combination:
    first, second = spec.s0_columns
    free = [letter for letter in alphabet(n) if letter not in spec.excluded]
    right_columns = spec.right.columns

    combination = Combination(domain)
    for chosen in combinations(free, spec.a):
        sign, left, right = normalize_pair(
            [chosen + first, _bars(chosen) + second],
            right_columns,
        )
        if sign:
            combination.add_term(sign, left, right)
    return combination


def relation_rhs(spec: RelationSpec, n: int) -> SdExpansion:
    """Termos de 𝒮_1, ..., 𝒮_a, sem normalizar as colunas."""
    alphabet(n)  # valida n
    first, second = spec.s0_columns
    t_first, t_second = spec.right.columns
    excluded = sorted(spec.excluded)
    pairs = pairs_in(t_first, t_second)

    terms = []
    for d in range(1, spec.a + 1):
        parity = -1 if (spec.a - d) % 2 else 1

        for deleted in combinations(pairs, d):
            epsilon = deletion_sign(t_first, t_second, deleted)
            remaining = delete_letters(t_first, t_second, deleted)
            reduced = Tableau.from_columns([column for column in remaining if column])
            for chosen in combinations(excluded, spec.a - d):
                terms.append(SdTerm(
                    d=d,
                    sign=parity * epsilon,
                    left_columns=(chosen + first, _bars(chosen) + second),
                    right=reduced,
                ))

    return SdExpansion(spec, tuple(terms))


def verify_relation(spec: RelationSpec, points, mode=Mode.ON, domain=None) -> bool:
    """Avalia LHS − RHS em cada ponto; True se todos derem zero."""
    mode = Mode.parse(mode)
    points = list(points)
    if not points:
        raise DomainError("Nenhum ponto para verificar a relação")

    domain = domain or points[0].domain
    n = points[0].n
    rhs = relation_rhs(spec, n).to_combination(domain, mode)
    difference = relation_lhs(spec, n, domain) - rhs

    for index, point in enumerate(points):
        if mode != Mode.GO and point.gamma_value != point.domain.one:
            raise DomainError(f"Ponto {index} não é ortogonal (γ ≠ 1)")

        value = evaluate_combination(difference, point.matrix, n, point.gamma_value)
        if not domain.is_zero(value):
            logger.warning(f"[RELSUM] Relação falhou no ponto {index}")
            return False

    logger.debug(
        f"[RELSUM] a={spec.a} termos={len(difference)} pontos={len(points)} ok"
    )
    return True
