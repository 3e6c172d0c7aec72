"""
Comandos da linha de comando.

Regras gerais:
- Cada comando recebe um JobConfig já validado e devolve CommandResult
- Erros de domínio sobem para o parser, que escolhe o código de saída
- Verificação em pontos só quando config.points > 0
"""

import logging

from config import settings

from apps.cli.fixtures import WORKED_EXAMPLES
from apps.cli.models import CommandResult, JobConfig
from apps.core.exceptions import ConfigError, VerificationError
from apps.gl_straighten.models import Combination
from apps.gl_straighten.services import (
    format_certificate,
    parse_certificate,
    symbolic_poly,
    two_column_straighten,
)
from apps.group_oracle.services import basis_suite, point_batch, verify_on_group
from apps.on_straighten.models import Mode
from apps.on_straighten.services import fix_os1, fix_os2, fix_os3, get_straightener
from apps.polyring.services import bideterminant
from apps.tableaux.domain.rules import gl_alphabet, satisfies_column_condition
from apps.tableaux.services.queries import enumerate_gl_standard, enumerate_on_standard
from apps.tableaux.utils import format_tableau, parse_shape, parse_tableau

logger = logging.getLogger("apps.cli")

FIXES = {"OS1": fix_os1, "OS2": fix_os2, "OS3": fix_os3}


def _check_identity(
    left, right, result: Combination, n: int, mode: Mode, config: JobConfig
) -> bool:
    """GL: identidade simbólica. ON/GO: resíduo nulo em config.points pontos."""
    if mode == Mode.GL:
        return symbolic_poly(result, n) == bideterminant(left, right, result.domain)

    points = point_batch(n, config.points, config.seed, mode, config.domain)
    residual = Combination.single(left, right, domain=result.domain) - result
    return verify_on_group(residual, points)


def cmd_straighten(
    config: JobConfig, left_text: str, right_text: str, trace=None
) -> CommandResult:
    left, right = parse_tableau(left_text), parse_tableau(right_text)
    straightener = get_straightener(
        n=config.n,
        mode=config.mode,
        domain=config.domain,
        trace=trace,
        max_terms=config.max_terms,
        fuel=config.fuel,
    )
    result = straightener.straighten(left, right)
    certificate = format_certificate(result)

    if config.points and not _check_identity(
        left, right, result, config.n, config.mode, config
    ):
        raise VerificationError("Certificado não confere com a entrada")
    return CommandResult(certificate)


def cmd_enumerate(config: JobConfig, shape_text: str) -> CommandResult:
    shape = parse_shape(shape_text)
    lines = []

    if config.mode == Mode.GL:
        tableaux = []
        if shape.rows <= config.n:
            tableaux = enumerate_gl_standard(shape, gl_alphabet(config.n))
    else:
        if not satisfies_column_condition(shape, config.n):
            lines.append("note: column condition λ′₁+λ′₂ ≤ n violated")
        tableaux = list(enumerate_on_standard(shape, config.n))

    lines.extend(format_tableau(tableau) for tableau in tableaux)
    lines.append(f"count={len(tableaux)}")
    return CommandResult("\n".join(lines))


def cmd_verify(config: JobConfig, degree: int) -> CommandResult:
    if config.mode == Mode.GL:
        raise ConfigError("verify exige modo on ou go")

    report = basis_suite(
        config.n,
        degree,
        config.mode,
        num_points=config.points or None,
        domain=config.domain,
        seed=config.seed,
        cap=settings.BASIS_SUITE_CAP,
        margin=settings.BASIS_POINT_MARGIN,
        spanning_samples=settings.BASIS_SPANNING_SAMPLES,
        entry_range=settings.ORACLE_ENTRY_RANGE,
        widen_attempts=settings.ORACLE_WIDEN_ATTEMPTS,
        max_retries=settings.ORACLE_MAX_RETRIES,
        straightener_options={"max_terms": config.max_terms, "fuel": config.fuel},
    )
    return CommandResult(str(report), report.passed)


# ================================================================
# EXEMPLOS TRABALHADOS
# ================================================================

def run_example(example, domain) -> Combination:
    left, right = parse_tableau(example.left), parse_tableau(example.right)
    if example.kind == "GL":
        _, head, drop = two_column_straighten(left, right, domain)
        return head + drop
    return FIXES[example.kind](left, right, example.index, example.n, Mode.ON, domain)


def _diff(expected: Combination, actual: Combination) -> list[str]:
    wanted = set(format_certificate(expected).splitlines())
    found = set(format_certificate(actual).splitlines())
    return [f"  - {line}" for line in sorted(wanted - found)] + [
        f"  + {line}" for line in sorted(found - wanted)
    ]


def cmd_paper_examples(config: JobConfig, fixtures=None) -> CommandResult:
    """
    Reproduz cada exemplo e compara com o certificado embutido.

    Com config.points > 0 também verifica em pontos do grupo.
    """
    fixtures = WORKED_EXAMPLES if fixtures is None else fixtures
    lines, ok = [], True

    for example in fixtures:
        expected = parse_certificate("\n".join(example.expected), config.domain)
        actual = run_example(example, config.domain)
        passed = actual == expected
        details = [] if passed else _diff(expected, actual)

        if passed and config.points:
            left, right = parse_tableau(example.left), parse_tableau(example.right)
            mode = Mode.GL if example.kind == "GL" else Mode.ON
            if not _check_identity(left, right, actual, example.n, mode, config):
                passed = False
                details.append(f"  identidade falhou em {config.points} pontos")

        logger.info(f"[Examples] {example.name}: {'PASS' if passed else 'FAIL'}")
        lines.append(f"{example.name}: {'PASS' if passed else 'FAIL'}")
        lines.extend(details)
        ok = ok and passed

    return CommandResult("\n".join(lines), ok)
