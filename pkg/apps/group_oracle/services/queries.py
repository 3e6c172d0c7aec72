"""
Leituras no grupo: avaliação em pontos, posto de avaliação e suíte de base.

Regras gerais:
- Identidades "como funções no grupo" são verificadas por avaliação exata
- Independência linear = posto da matriz de avaliação igual à contagem
- Dois lotes independentes de pontos precisam concordar
"""

import logging
import random
from functools import singledispatch

from apps.core.domains import QQ
from apps.core.exceptions import CapExceededError, CoefficientDomainError, DomainError
from apps.core.linalg import matrix_rank
from apps.gl_straighten.models import BidetTerm, Combination
from apps.gl_straighten.services.queries import evaluate_combination
from apps.group_oracle.models import BasisReport, DegreeListing
from apps.group_oracle.services.commands import (
    DEFAULT_ENTRY_RANGE,
    DEFAULT_MAX_RETRIES,
    point_batch,
)
from apps.on_straighten.models import Mode
from apps.on_straighten.services.commands import ONStraightener
from apps.polyring.models import Polynomial
from apps.polyring.services.queries import evaluate, evaluate_bideterminant
from apps.tableaux.domain.rules import gl_alphabet, is_on_standard
from apps.tableaux.services.queries import (
    enumerate_column_strict,
    enumerate_on_standard,
    partitions_of,
    partitions_up_to,
)

logger = logging.getLogger("apps.group_oracle")


def _check_domain(domain, point):
    if domain.characteristic != point.domain.characteristic:
        raise CoefficientDomainError(
            f"Domínio {domain.name} incompatível com ponto sobre {point.domain.name}"
        )


@singledispatch
def evaluate_on_point(value, point):
    raise TypeError(f"Não sei avaliar {type(value).__name__} em um ponto")


@evaluate_on_point.register
def _(value: Polynomial, point):
    _check_domain(value.domain, point)
    return evaluate(value, point.matrix, point.n)


@evaluate_on_point.register
def _(value: BidetTerm, point):
    result = value.coef * evaluate_bideterminant(
        value.left, value.right, point.matrix, point.n, point.domain
    )
    return result * point.gamma_value ** value.gamma_pow


@evaluate_on_point.register
def _(value: Combination, point):
    _check_domain(value.domain, point)
    return evaluate_combination(value, point.matrix, point.n, point.gamma_value)


def verify_on_group(value, points) -> bool:
    """True sse ``value`` se anula em todos os pontos."""
    return all(
        point.domain.is_zero(evaluate_on_point(value, point)) for point in points
    )


def evaluation_rank(functions, points, domain=None) -> int:
    points = list(points)
    if not points:
        return 0
    domain = domain or points[0].domain
    rows = [[evaluate_on_point(f, point) for point in points] for f in functions]
    return matrix_rank(rows, domain)


# ================================================================
# BASE PADRÃO
# ================================================================

def _standard_pairs(shape, n):
    tableaux = list(enumerate_on_standard(shape, n))
    return [(left, right) for left in tableaux for right in tableaux]


def standard_basis(n: int, r_max: int, mode=Mode.ON, domain=QQ) -> list[BidetTerm]:
    """
    ON: [S:T] O(n)-padrão com |λ| ≤ r_max.
    GO: γ^k[S:T] com 2k + |λ| = r, para cada r ≤ r_max.
    """
    mode = Mode.parse(mode)
    if mode == Mode.GL:
        raise DomainError("Base no grupo exige modo on ou go")

    one = domain.one
    if mode == Mode.ON:
        return [
            BidetTerm(one, 0, left, right)
            for shape in partitions_up_to(r_max, max_rows=n)
            for left, right in _standard_pairs(shape, n)
        ]

    basis = []
    for degree in range(r_max + 1):
        for k in range(degree // 2 + 1):
            for shape in partitions_of(degree - 2 * k, max_rows=n):
                basis.extend(
                    BidetTerm(one, k, left, right)
                    for left, right in _standard_pairs(shape, n)
                )
    return basis


def degree_listings(basis) -> tuple:
    """Contagem por (grau, k, |λ|) para a listagem GO."""
    counts = {}
    for term in basis:
        key = (term.graded_degree, term.gamma_pow, term.left.size)
        counts[key] = counts.get(key, 0) + 1
    return tuple(DegreeListing(*key, count) for key, count in sorted(counts.items()))


# ================================================================
# SUÍTE
# ================================================================

def _non_standard_samples(n, r_max, samples, rng):
    """Pares (S, T) de colunas estritas com S não O(n)-padrão."""
    letters = gl_alphabet(n)
    pool = []
    for shape in partitions_up_to(r_max, max_rows=n):
        if not shape.parts:
            continue
        candidates = enumerate_column_strict(shape, letters)
        bad = [t for t in candidates if not is_on_standard(t, n)]
        if bad:
            pool.append((bad, candidates))

    if not pool:
        return []

    found = []
    for _ in range(samples):
        bad, candidates = rng.choice(pool)
        found.append((rng.choice(bad), rng.choice(candidates)))
    return found


def _spanning_residuals(n, mode, domain, samples, points, straightener_options):
    straightener = ONStraightener(n, domain, mode=mode, **straightener_options)
    zero = 0
    for left, right in samples:
        result = straightener.straighten(left, right)
        residual = Combination.single(left, right, domain=domain) - result
        if verify_on_group(residual, points):
            zero += 1
        else:
            logger.warning(f"[Suite] Resíduo não nulo para S={left.rows}")
    return zero


def basis_suite(
    n: int,
    r_max: int,
    mode=Mode.ON,
    num_points: int | None = None,
    domain=QQ,
    seed: int = 2024,
    *,
    cap: int = 600,
    margin: int = 8,
    spanning_samples: int = 4,
    entry_range: int = DEFAULT_ENTRY_RANGE,
    widen_attempts: int = 3,
    max_retries: int = DEFAULT_MAX_RETRIES,
    straightener_options=None,
) -> BasisReport:
    """
    Certifica a base padrão em escala de mesa.

    Posto insuficiente num lote provoca novo sorteio com faixa de entradas
    ampliada, até ``widen_attempts`` vezes.
    """
    mode = Mode.parse(mode)
    basis = standard_basis(n, r_max, mode, domain)
    count = len(basis)
    if count > cap:
        raise CapExceededError(
            f"Base com {count} elementos excede o limite {cap}", count=count, cap=cap
        )

    size = max(num_points or 0, count + margin)
    logger.info(
        f"[Suite] n={n} modo={mode.value} r≤{r_max}: {count} elementos, {size} pontos"
    )

    def draw(batch_seed, spread):
        points = point_batch(
            n,
            size,
            batch_seed,
            mode,
            domain,
            entry_range=spread,
            max_retries=max_retries,
        )
        return points, evaluation_rank(basis, points, domain)

    spread = entry_range
    first, rank = draw(seed, spread)
    second, rank_second = draw(seed + 1, spread)

    for attempt in range(widen_attempts):
        if rank == rank_second == count:
            break
        spread += entry_range
        logger.warning(
            f"[Suite] Posto {rank}/{rank_second} < {count}; "
            f"ampliando faixa para {spread}"
        )
        first, rank = draw(seed + 2 * attempt + 2, spread)
        second, rank_second = draw(seed + 2 * attempt + 3, spread)

    samples = _non_standard_samples(n, r_max, spanning_samples, random.Random(seed))
    spanning_zero = _spanning_residuals(
        n, mode, domain, samples, first, straightener_options or {}
    )

    report = BasisReport(
        n=n,
        mode=mode.value,
        coeff=domain.name,
        r_max=r_max,
        count=count,
        batch1=len(first),
        batch2=len(second),
        rank=min(rank, rank_second),
        rank_second=max(rank, rank_second),
        spanning_zero=spanning_zero,
        spanning_total=len(samples),
        listings=degree_listings(basis) if mode == Mode.GO else (),
    )
    logger.info(f"[Suite] {'PASS' if report.passed else 'FAIL'}")
    return report
