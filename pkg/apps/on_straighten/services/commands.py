"""
Endireitamento O(n) e GO(n).

Regras gerais:
- As identidades valem como funções no grupo, não no anel de polinômios
- Soma de colunas > n: redução pelo complemento (grau cai)
- OS1, OS2, OS3: família de substituição + soma de relação
- Modo GO carrega o expoente de γ em cada termo
"""

import logging
from itertools import combinations

from apps.core.domains import QQ
from apps.core.exceptions import DomainError, StraighteningError
from apps.gl_straighten.domain.rules import (
    normalize_pair,
    require_two_columns,
    sort_column,
)
from apps.gl_straighten.models import Combination
from apps.gl_straighten.services.commands import GLStraightener, one_switch_expand
from apps.on_straighten.domain.rules import (
    complement_column,
    complement_sign,
    excluded_for,
    pair_sets,
    reorder_sign,
    replacement_positions,
)
from apps.on_straighten.models import ColumnComplement, Mode, RelationSpec
from apps.on_straighten.services.relations import relation_rhs
from apps.tableaux.domain.rules import (
    alphabet,
    is_on_standard,
    on_standard_report,
    validate_letters,
)
from apps.tableaux.models import IndexLetter, Tableau, ViolationKind

logger = logging.getLogger("apps.on_straighten")


# ================================================================
# COMPLEMENTO DE UMA COLUNA
# ================================================================

def _as_column(value) -> tuple:
    if isinstance(value, Tableau):
        if len(value.columns) > 1:
            raise DomainError(f"Esperada uma coluna, forma {value.shape}")
        return value.columns[0] if value.columns else ()
    return tuple(value)


def _complement(column, n: int):
    """(sinal, S̄′) para uma coluna em qualquer ordem."""
    sign, ordered = sort_column(column)
    if sign == 0:
        raise DomainError("Coluna com entrada repetida")
    return sign * complement_sign(ordered, n), complement_column(ordered, n)


def one_column_complement(left, right, n: int) -> ColumnComplement:
    """
    [S:T] = ε·det·[S̄′:T̄′] em O(n).

    Em GO(n) o fator é ε·γ^k·det⁻¹ com o mesmo ε.
    """
    allowed = set(alphabet(n))
    first, second = _as_column(left), _as_column(right)
    if len(first) != len(second):
        raise DomainError(f"Colunas de comprimentos {len(first)} e {len(second)}")
    if any(letter not in allowed for letter in first + second):
        raise DomainError(f"Letra fora de ℐ({n})")

    s_sign, s_bar = _complement(first, n)
    t_sign, t_bar = _complement(second, n)

    if not s_bar:
        return ColumnComplement(s_sign * t_sign, Tableau.empty(), Tableau.empty())
    return ColumnComplement(
        s_sign * t_sign, Tableau.from_columns([s_bar]), Tableau.from_columns([t_bar])
    )


def reduce_tall_shape(
    left: Tableau, right: Tableau, n: int, mode=Mode.ON, domain=QQ
) -> Combination:
    """[S:T] com k₁ + k₂ > n vira ε₁ε₂·γ^{k₁+k₂−n}·[S̃:T̃], S̃ = (S̄′₂|S̄′₁)."""
    mode = Mode.parse(mode)
    if mode == Mode.GL:
        raise DomainError("Redução por complemento só vale em O(n) ou GO(n)")

    require_two_columns(left, right)
    validate_letters(left, n)
    validate_letters(right, n)
    s_first, s_second = left.columns
    t_first, t_second = right.columns
    excess = len(s_first) + len(s_second) - n
    if excess <= 0:
        raise DomainError(
            f"Soma das colunas {len(s_first) + len(s_second)} não excede n={n}"
        )

    sign_1, s_bar_1 = _complement(s_first, n)
    sign_2, s_bar_2 = _complement(s_second, n)
    sign_3, t_bar_1 = _complement(t_first, n)
    sign_4, t_bar_2 = _complement(t_second, n)

    combination = Combination(domain)
    sign, new_left, new_right = normalize_pair([s_bar_2, s_bar_1], [t_bar_2, t_bar_1])
    if sign:
        gamma_pow = excess if mode == Mode.GO else 0
        coef = sign * sign_1 * sign_2 * sign_3 * sign_4
        combination.add_term(coef, new_left, new_right, gamma_pow)
    return combination


# ================================================================
# CORREÇÕES OS1, OS2, OS3
# ================================================================

def _relation_setup(
    kind: ViolationKind, left: Tableau, right: Tableau, j: int, n: int, mode
):
    mode = Mode.parse(mode)
    if mode == Mode.GL:
        raise DomainError(f"{kind.value} só se aplica em O(n) ou GO(n)")

    require_two_columns(left, right)
    validate_letters(left, n)
    validate_letters(right, n)

    report = on_standard_report(left, n)
    if not any(v.kind == kind and v.index == j for v in report.violations):
        raise DomainError(f"S não viola {kind.value} no índice {j}")

    first, second = left.columns
    paired, missing = pair_sets(first, second, j, n)
    excluded = excluded_for(kind, missing, j)
    p, q = replacement_positions(first, second, paired)

    s0 = (
        tuple(x for index, x in enumerate(first) if index not in p),
        tuple(x for index, x in enumerate(second) if index not in q),
    )
    spec = RelationSpec(s0, right, len(paired), excluded)
    rho = reorder_sign(p, q, len(first), len(second))
    return mode, spec, tuple(paired), p, q, rho


def _replacement_sum(left, right, spec, p, q, n, skip, domain) -> Combination:
    """Σ [U:T] sobre as substituições u ∉ skip, com colunas ordenadas."""
    first, second = left.columns
    free = [letter for letter in alphabet(n) if letter not in spec.excluded]
    total = Combination(domain)

    for chosen in combinations(free, spec.a):
        if chosen in skip:
            continue
        new_first, new_second = list(first), list(second)
        for position, letter in zip(p, chosen):
            new_first[position] = letter
        for position, letter in zip(q, chosen):
            new_second[position] = letter.bar()

        sign, u_left, u_right = normalize_pair([new_first, new_second], right.columns)
        if sign:
            total.add_term(sign, u_left, u_right)
    return total


def _fix(kind: ViolationKind, left, right, j, n, mode, domain):
    """(resultado, ρ·Σ γ^d 𝒮_d) para a correção de ``kind`` no índice j."""
    mode, spec, paired, p, q, rho = _relation_setup(kind, left, right, j, n, mode)
    relation = relation_rhs(spec, n).to_combination(domain, mode).scaled(rho)

    if kind == ViolationKind.OS3:
        barred = IndexLetter(j, True)
        star = tuple(sorted((set(paired) - {barred}) | {IndexLetter(j)}))
        rest = _replacement_sum(left, right, spec, p, q, n, {paired, star}, domain)
        switch = one_switch_expand(left, right, j, domain)
        result = (relation - rest - switch).scaled(domain.half())
    else:
        rest = _replacement_sum(left, right, spec, p, q, n, {paired}, domain)
        result = relation - rest

    logger.debug(
        f"[{kind.value}] j={j} a={spec.a} |C|={len(spec.excluded)} termos={len(result)}"
    )
    return result, relation


def fix_os1(
    left: Tableau, right: Tableau, j: int, n: int, mode=Mode.ON, domain=QQ
) -> Combination:
    """[S:T] = −Σ_{U≠S}[U:T] + ρ·Σ γ^d 𝒮_d, com C excluído."""
    return _fix(ViolationKind.OS1, left, right, j, n, mode, domain)[0]


def fix_os2(
    left: Tableau, right: Tableau, j: int, n: int, mode=Mode.ON, domain=QQ
) -> Combination:
    """Como fix_os1, excluindo C − {ȷ̄}."""
    return _fix(ViolationKind.OS2, left, right, j, n, mode, domain)[0]


def fix_os3(
    left: Tableau, right: Tableau, j: int, n: int, mode=Mode.ON, domain=QQ
) -> Combination:
    """
    2[S:T] = ρ·Σ γ^d 𝒮_d − Σ_{U∉{S,S*}}[U:T] − ([S*:T] − [S:T]).

    Exige ½ no domínio de coeficientes.
    """
    return _fix(ViolationKind.OS3, left, right, j, n, mode, domain)[0]


# ================================================================
# MOTOR O(n)
# ================================================================

class ONStraightener(GLStraightener):
    """
    Motor O(n)/GO(n): mesma lista de trabalho, padrão e reescrita trocados.

    Ordem de despacho: GL, soma de colunas, depois menor índice (OS1 > OS2 > OS3).
    """

    def __init__(self, n: int, domain=QQ, *, mode=Mode.ON, **options):
        mode = Mode.parse(mode)
        if mode == Mode.GL:
            raise DomainError("ONStraightener exige modo on ou go")
        alphabet(n)
        super().__init__(n, domain, **options)
        self.mode = mode

    def is_standard(self, tableau: Tableau) -> bool:
        return is_on_standard(tableau, self.n)

    def _rewrite(self, left: Tableau, right: Tableau):
        violation = on_standard_report(left, self.n).primary
        if violation is None:
            return None

        if violation.kind == ViolationKind.GL:
            step = super()._rewrite(left, right)
            if step is None:
                raise StraighteningError(
                    f"Quadro não GL-padrão sem linha violadora: {left.rows}"
                )
            return step

        if violation.kind == ViolationKind.OS3:
            indices = (0, violation.column - 1)
        else:
            indices = (0, 1)
        sub_left, sub_right = self._extract(left, right, indices)

        if violation.kind == ViolationKind.COLSUM:
            expansion = reduce_tall_shape(
                sub_left, sub_right, self.n, self.mode, self.domain
            )
            return "COLSUM", 0, self._embed(left, right, indices, expansion)

        expansion, relation = _fix(
            violation.kind,
            sub_left,
            sub_right,
            violation.index,
            self.n,
            self.mode,
            self.domain,
        )
        self._emit("RELSUM", violation.index, 1, len(relation))
        embedded = self._embed(left, right, indices, expansion)
        return violation.kind.value, violation.index, embedded


def on_straighten(
    left: Tableau, right: Tableau, n: int, mode=Mode.ON, domain=QQ, **options
) -> Combination:
    """Combinação de pares O(n)-padrão igual a [S:T] em O(n) (ou GO(n), com γ)."""
    return ONStraightener(n, domain, mode=mode, **options).straighten(left, right)
