"""
Endireitamento GL(n) (Mead).

Regras gerais:
- [S:T] = head + drop é identidade exata no anel de polinômios
- O motor processa termos do maior para o menor na medida
  (tamanho, comprimentos de coluna, ≺), mesclando coeficientes pendentes
"""

import heapq
import logging
import threading
from itertools import combinations, count

from apps.core.domains import QQ
from apps.core.exceptions import CapExceededError, DomainError, StraighteningError
from apps.gl_straighten.domain.rules import (
    column_swap,
    normalize_pair,
    require_two_columns,
    sort_column,
    sort_columns,
    violating_row,
)
from apps.gl_straighten.models import Combination, TraceStep
from apps.tableaux.domain.rules import (
    first_row_violation,
    is_gl_standard,
    prec_key,
    validate_letters,
)
from apps.tableaux.models import Tableau

logger = logging.getLogger("apps.gl_straighten")

DEFAULT_MAX_TERMS = 50000
DEFAULT_FUEL = 500000


# ================================================================
# DUAS COLUNAS
# ================================================================

def two_column_straighten(left: Tableau, right: Tableau, domain=QQ):
    """
    Expande det H de duas formas.

    Retorna (t, head, drop) com [S:T] = head + drop; head só tem termos
    [U:T] de forma λ com U ≻ S; drop tem forma de colunas (k+1, t−1, ℓ−t).
    """
    require_two_columns(left, right)
    t = violating_row(left)
    if t is None:
        raise DomainError("Quadro já é GL-padrão; nada a endireitar")

    first, second = left.columns
    a, b = right.columns
    k, ell = len(first), len(second)
    letters = first + second

    head = Combination(domain)
    fixed = list(range(t - 1))
    z_rows = list(range(t - 1, k + t))
    base = k * (k + 1) // 2

    for chosen in combinations(z_rows, k - t + 1):
        rows = fixed + list(chosen)
        if rows == list(range(k)):
            continue
        rest = [r for r in range(k + ell) if r not in rows]
        laplace = -1 if (sum(r + 1 for r in rows) + base) % 2 else 1

        sign, u_left, u_right = normalize_pair(
            [[letters[r] for r in rows], [letters[r] for r in rest]],
            [a, b],
        )
        if sign:
            head.add_term(-laplace * sign, u_left, u_right)

    drop = Combination(domain)
    z = first[t - 1:] + second[:t]
    row_sum = sum(range(1, t)) + sum(range(k + t + 1, k + ell + 1))

    for q1 in combinations(range(k), t - 1):
        for q2 in combinations(range(ell), ell - t):
            exponent = row_sum + sum(q + 1 for q in q1) + sum(k + q + 1 for q in q2)
            rest_a = [a[q] for q in range(k) if q not in q1]
            rest_b = [b[q] for q in range(ell) if q not in q2]

            sign, v_left, v_right = normalize_pair(
                [z, first[:t - 1], second[t:]],
                [rest_a + rest_b, [a[q] for q in q1], [b[q] for q in q2]],
            )
            if sign:
                drop.add_term(-sign if exponent % 2 else sign, v_left, v_right)

    return t, head, drop


def one_switch_expand(
    left: Tableau, right: Tableau, row: int, domain=QQ
) -> Combination:
    """[S*:T] − [S:T], onde S* troca o par ī, i da linha ``row`` por i, ī."""
    require_two_columns(left, right)
    if violating_row(left) is not None:
        raise DomainError("one_switch_expand exige S GL-padrão")

    star = column_swap(left, row)
    if any(sort_column(column)[1] != column for column in star.columns):
        raise DomainError("S* não é estritamente crescente nas colunas")

    _, head, drop = two_column_straighten(star, right, domain)
    if head.coefficient(left, right) != domain.one:
        raise StraighteningError("Expansão de S* não contém S com coeficiente +1")

    return head.add_term(-1, left, right).add(drop)


# ================================================================
# MOTOR
# ================================================================

class _Budget:
    def __init__(self, fuel: int):
        self.fuel = fuel

    def spend(self):
        self.fuel -= 1
        if self.fuel < 0:
            raise StraighteningError("Combustível esgotado: a reescrita não terminou")


class GLStraightener:
    """
    Motor de endireitamento por lista de trabalho.

    A subclasse O(n) troca apenas ``is_standard`` e ``_rewrite``.
    O cache (S, T) → Combination é protegido por lock.
    """

    def __init__(
        self,
        n: int,
        domain=QQ,
        *,
        max_terms: int = DEFAULT_MAX_TERMS,
        fuel: int = DEFAULT_FUEL,
        trace=None,
    ):
        self.n = n
        self.domain = domain
        self.max_terms = max_terms
        self.fuel = fuel
        self.trace = trace
        self._cache = {}
        self._lock = threading.Lock()

    # ---------------------------------------------------------------
    # API
    # ---------------------------------------------------------------

    def is_standard(self, tableau: Tableau) -> bool:
        return is_gl_standard(tableau, self.n)

    def validate(self, left: Tableau, right: Tableau):
        if left.shape != right.shape:
            raise DomainError(f"Formas diferentes: {left.shape} e {right.shape}")
        if left.shape.rows > self.n:
            raise DomainError(f"Forma {left.shape} tem mais de {self.n} linhas")
        validate_letters(left, self.n)
        validate_letters(right, self.n)

    def straighten(self, left: Tableau, right: Tableau) -> Combination:
        self.validate(left, right)
        sign, left, right = sort_columns(left, right)
        if sign == 0:
            return Combination(self.domain)

        budget = _Budget(self.fuel)
        return self._straighten_pair(left, right, budget).scaled(sign)

    # ---------------------------------------------------------------
    # Recursão
    # ---------------------------------------------------------------

    def _straighten_pair(self, left, right, budget) -> Combination:
        with self._lock:
            cached = self._cache.get((left, right))
        if cached is not None:
            return cached.copy()

        result = Combination(self.domain)
        start = Combination.single(left, right, domain=self.domain)

        for term in self._straighten_left(start, budget):
            if self.is_standard(term.right):
                result.add_term(term.coef, term.left, term.right, term.gamma_pow)
                continue

            # lado direito via transposição: [S:T](X) = [T:S](Xᵗ)
            flipped = Combination.single(term.right, term.left, domain=self.domain)
            for sub in self._straighten_left(flipped, budget):
                coef = term.coef * sub.coef
                gamma_pow = term.gamma_pow + sub.gamma_pow
                if self.is_standard(sub.right):
                    result.add_term(coef, sub.right, sub.left, gamma_pow)
                else:
                    nested = self._straighten_pair(sub.right, sub.left, budget)
                    result.add(nested, coef, gamma_pow)

        with self._lock:
            self._cache[(left, right)] = result.copy()
        return result

    def _priority(self, left: Tableau, right: Tableau, gamma_pow: int) -> tuple:
        return (
            -left.size,
            left.shape.conjugate().parts,
            prec_key(left),
            gamma_pow,
            prec_key(right),
        )

    def _straighten_left(self, combination: Combination, budget) -> Combination:
        heap, pending, order = [], {}, count()
        done = Combination(self.domain)

        def push(coef, gamma_pow, left, right):
            key = (gamma_pow, left, right)
            if key in pending:
                pending[key] = pending[key] + coef
                return
            pending[key] = coef
            priority = self._priority(left, right, gamma_pow)
            heapq.heappush(heap, (priority, next(order), key))

        for key, coef in combination.items():
            push(coef, *key)

        while heap:
            _, _, key = heapq.heappop(heap)
            coef = pending.pop(key)
            if self.domain.is_zero(coef):
                continue

            gamma_pow, left, right = key
            step = self._rewrite(left, right)
            if step is None:
                done.add_term(coef, left, right, gamma_pow)
                continue

            budget.spend()
            kind, witness, expansion = step
            before = len(pending) + len(done) + 1

            for (sub_gamma, sub_left, sub_right), sub_coef in expansion.items():
                push(coef * sub_coef, gamma_pow + sub_gamma, sub_left, sub_right)

            after = len(pending) + len(done)
            if after > self.max_terms:
                raise CapExceededError(
                    f"Limite de termos excedido: {after} > {self.max_terms}",
                    count=after,
                    cap=self.max_terms,
                )
            self._emit(kind, witness, before, after)

        return done

    def _emit(self, kind: str, witness: int, before: int, after: int):
        logger.debug(f"[{kind}] j={witness} termos {before}->{after}")
        if self.trace is not None:
            self.trace(TraceStep(kind, witness, before, after))

    # ---------------------------------------------------------------
    # Reescrita
    # ---------------------------------------------------------------

    def _rewrite(self, left: Tableau, right: Tableau):
        """(tipo, testemunha, expansão) para o lado esquerdo, ou None se padrão."""
        violation = first_row_violation(left)
        if violation is None:
            return None

        column, _ = violation
        indices = (column - 1, column)
        sub_left, sub_right = self._extract(left, right, indices)
        t, head, drop = two_column_straighten(sub_left, sub_right, self.domain)
        return "GL", t, self._embed(left, right, indices, head.add(drop))

    @staticmethod
    def _extract(left: Tableau, right: Tableau, indices):
        return (
            Tableau.from_columns([left.columns[i] for i in indices]),
            Tableau.from_columns([right.columns[i] for i in indices]),
        )

    def _embed(self, left: Tableau, right: Tableau, indices, expansion: Combination):
        """Recoloca os resultados do subproblema nas colunas ``indices``."""
        result = Combination(self.domain)
        s_cols, t_cols = list(left.columns), list(right.columns)

        for (gamma_pow, sub_left, sub_right), coef in expansion.items():
            if len(sub_left.columns) == len(indices):
                new_s, new_t = list(s_cols), list(t_cols)
                pairs = zip(sub_left.columns, sub_right.columns)
                for index, (s_col, t_col) in zip(indices, pairs):
                    new_s[index], new_t[index] = s_col, t_col
            else:
                first = indices[0]
                before = [i for i in range(first) if i not in indices]
                after = [i for i in range(first + 1, len(s_cols)) if i not in indices]
                new_s = (
                    [s_cols[i] for i in before]
                    + list(sub_left.columns)
                    + [s_cols[i] for i in after]
                )
                new_t = (
                    [t_cols[i] for i in before]
                    + list(sub_right.columns)
                    + [t_cols[i] for i in after]
                )

            sign, new_left, new_right = normalize_pair(new_s, new_t)
            if sign:
                result.add_term(coef * sign, new_left, new_right, gamma_pow)

        return result


def gl_straighten(
    left: Tableau, right: Tableau, n: int, domain=QQ, **options
) -> Combination:
    """Combinação de pares GL(n)-padrão igual a [S:T] no anel de polinômios."""
    return GLStraightener(n, domain, **options).straighten(left, right)
