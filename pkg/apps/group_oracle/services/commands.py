"""
Geração de pontos exatos em SO(n), O(n) e GO(n).

Regras gerais:
- Transformada de Cayley g = (I − A)(I + A)⁻¹ com A J-antissimétrica
- Componente MINUS: n ímpar nega a posição 0; n par troca 1̄ ↔ 1
- GO(n): n par multiplica por ξ(c) (c nas posições barradas); n ímpar por c·I
- Pontos de 𝔽_p saem da redução de pontos racionais
"""

import logging
import random
from fractions import Fraction

from apps.core.domains import QQ
from apps.core.exceptions import DomainError, SeedingError
from apps.core.linalg import solve
from apps.group_oracle.models import Component, FormMatrix, GroupPoint
from apps.on_straighten.models import Mode
from apps.tableaux.domain.rules import gl_alphabet

logger = logging.getLogger("apps.group_oracle")

DEFAULT_ENTRY_RANGE = 3
DEFAULT_MAX_RETRIES = 64


def _identity(n: int, domain):
    return [[domain.one if r == c else domain.zero for c in range(n)] for r in range(n)]


def _partner(n: int) -> dict:
    return {letter.position(n): letter.bar().position(n) for letter in gl_alphabet(n)}


def _random_rational(rng: random.Random, entry_range: int) -> Fraction:
    return Fraction(rng.randint(-entry_range, entry_range), rng.randint(1, entry_range))


def random_skew(n: int, rng: random.Random, entry_range: int = DEFAULT_ENTRY_RANGE):
    """A = J·K com K antissimétrica; então AᵀJ + JA = 0."""
    skew = [[Fraction(0)] * n for _ in range(n)]
    for r in range(n):
        for c in range(r + 1, n):
            value = _random_rational(rng, entry_range)
            skew[r][c], skew[c][r] = value, -value

    partner = _partner(n)
    return [list(skew[partner[r]]) for r in range(n)]


def cayley_point(n: int, skew, domain=QQ) -> GroupPoint | None:
    """g = (I + A)⁻¹(I − A); None se I + A for singular."""
    skew = [[domain.convert(x) for x in row] for row in skew]
    form = FormMatrix(n, domain).entries

    for r in range(n):
        for c in range(n):
            # (AᵀJ + JA)[r][c]
            value = sum(
                (skew[k][r] * form[k][c] + form[r][k] * skew[k][c] for k in range(n)),
                domain.zero,
            )
            if not domain.is_zero(value):
                raise DomainError("A não é J-antissimétrica")

    identity = _identity(n, domain)
    plus = [[identity[r][c] + skew[r][c] for c in range(n)] for r in range(n)]
    minus = [[identity[r][c] - skew[r][c] for c in range(n)] for r in range(n)]

    matrix = solve(plus, minus, domain)
    if matrix is None:
        return None
    return GroupPoint(n, matrix, domain.one, domain.one, domain)


def reflection_point(n: int, domain=QQ) -> GroupPoint:
    """Elemento fixo de det −1 que preserva a forma."""
    matrix = _identity(n, domain)
    if n % 2:
        matrix[n - 1][n - 1] = -domain.one
    else:
        matrix[0][0] = matrix[1][1] = domain.zero
        matrix[0][1] = matrix[1][0] = domain.one
    return GroupPoint(n, matrix, -domain.one, domain.one, domain)


def similitude_point(n: int, c, domain=QQ) -> GroupPoint:
    """ξ(c) para n par (γ = c); c·I para n ímpar (γ = c²)."""
    c = domain.convert(c)
    if domain.is_zero(c):
        raise DomainError("c deve ser não nulo")

    matrix = _identity(n, domain)
    if n % 2:
        for r in range(n):
            matrix[r][r] = c
        return GroupPoint(n, matrix, c ** n, c ** 2, domain)

    for r in range(0, n, 2):
        matrix[r][r] = c
    return GroupPoint(n, matrix, c ** (n // 2), c, domain)


def random_so_point(
    n: int,
    seed: int,
    *,
    entry_range: int = DEFAULT_ENTRY_RANGE,
    max_retries: int = DEFAULT_MAX_RETRIES,
) -> GroupPoint:
    rng = random.Random(seed)
    for attempt in range(max_retries):
        point = cayley_point(n, random_skew(n, rng, entry_range))
        if point is not None:
            return point
        logger.debug(
            f"[Oracle] I + A singular (tentativa {attempt + 1}), sorteando de novo"
        )

    raise SeedingError(f"Cayley falhou {max_retries} vezes para n={n}, seed={seed}")


def random_on_point(
    n: int, seed: int, component=Component.PLUS, **options
) -> GroupPoint:
    point = random_so_point(n, seed, **options)
    if component == Component.MINUS:
        point = point * reflection_point(n)
    return point


def random_go_point(
    n: int, seed: int, c, component=Component.PLUS, **options
) -> GroupPoint:
    if not c:
        raise DomainError("c deve ser não nulo")
    return random_on_point(n, seed, component, **options) * similitude_point(n, c)


def reduce_point(point: GroupPoint, domain) -> GroupPoint:
    """
    Reduz um ponto racional ao domínio.

    CoefficientDomainError se algum denominador não for invertível.
    """
    return GroupPoint(point.n, point.matrix, point.det_value, point.gamma_value, domain)


def _draw_multiplier(rng: random.Random, entry_range: int) -> Fraction:
    while True:
        c = _random_rational(rng, entry_range)
        if c not in (0, 1):
            return c


def point_batch(
    n: int,
    count: int,
    seed: int,
    mode=Mode.ON,
    domain=QQ,
    *,
    entry_range: int = DEFAULT_ENTRY_RANGE,
    max_retries: int = DEFAULT_MAX_RETRIES,
) -> list[GroupPoint]:
    """
    Lote determinístico de pontos distintos.

    Os dois primeiros pontos são da componente MINUS; depois alterna.
    Em 𝔽_p, pontos cujos denominadores se anulam mod p são descartados.
    """
    mode = Mode.parse(mode)
    if mode == Mode.GL:
        raise DomainError("Pontos de grupo exigem modo on ou go")

    rng = random.Random(seed)
    points, seen = [], set()
    options = {"entry_range": entry_range, "max_retries": max_retries}

    for _ in range(count * max_retries):
        if len(points) == count:
            break

        index = len(points)
        component = Component.MINUS if index < 2 or index % 2 else Component.PLUS
        sub_seed = rng.randrange(2 ** 32)

        if mode == Mode.GO:
            c = _draw_multiplier(rng, entry_range)
            point = random_go_point(n, sub_seed, c, component, **options)
        else:
            point = random_on_point(n, sub_seed, component, **options)

        if domain.characteristic:
            try:
                point = reduce_point(point, domain)
            except DomainError:
                logger.warning(f"[Oracle] Ponto descartado: não reduz em {domain.name}")
                continue

        if point.matrix in seen:
            continue
        seen.add(point.matrix)
        points.append(point)

    if len(points) < count:
        raise SeedingError(f"Só {len(points)} de {count} pontos gerados para n={n}")

    return points
