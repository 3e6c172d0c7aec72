"""
Ponto de entrada da linha de comando.

Códigos de saída:
- 0: sucesso
- 2: erro de entrada ou configuração
- 3: verificação falhou
- 4: limite de tamanho excedido
"""

import argparse
import logging
import sys
from logging.config import dictConfig

from config import settings

from apps.cli.models import JobConfig
from apps.cli.services import (
    cmd_enumerate,
    cmd_paper_examples,
    cmd_straighten,
    cmd_verify,
)
from apps.core.exceptions import (
    CapExceededError,
    ConfigError,
    DomainError,
    VerificationError,
)

logger = logging.getLogger("apps.cli")

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VERIFY = 3
EXIT_CAP = 4


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="dimensão n do espaço")
    common.add_argument("--mode", default="on", choices=("gl", "on", "go"))
    common.add_argument("--coeff", default=None, help="q, zhalf ou f<primo>")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument(
        "--points", type=int, nargs="?", const=settings.ORACLE_POINTS, default=None,
        help="pontos de verificação (sem valor: ORACLE_POINTS)",
    )
    common.add_argument("--max-terms", type=int, default=None)
    common.add_argument(
        "--trace", action="store_true", help="passos de reescrita em stderr"
    )
    common.add_argument("--out", default=None, help="arquivo de saída (padrão: stdout)")

    parser = argparse.ArgumentParser(
        prog="orthostraight",
        description="Endireitamento de bideterminantes sobre O(n) e GO(n).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    straighten = sub.add_parser("straighten", parents=[common], help="endireita [S:T]")
    straighten.add_argument("--left", default=None, help="S, linhas separadas por ';'")
    straighten.add_argument("--right", default=None, help="T, linhas separadas por ';'")
    straighten.add_argument(
        "--file", default=None, help="arquivo com S e T em duas linhas"
    )

    enumerate_ = sub.add_parser(
        "enumerate", parents=[common], help="lista quadros padrão"
    )
    enumerate_.add_argument("--shape", required=True, help="forma, por exemplo 2,1")

    verify = sub.add_parser("verify", parents=[common], help="certifica a base padrão")
    verify.add_argument("--degree", type=int, required=True)

    sub.add_parser(
        "paper-examples", parents=[common], help="reproduz os exemplos trabalhados"
    )

    return parser


def _job_config(args) -> JobConfig:
    if args.n is None and args.command != "paper-examples":
        raise ConfigError("--n é obrigatório")

    options = {
        "n": args.n if args.n is not None else 6,
        "mode": args.mode,
        "trace": args.trace,
    }
    if args.coeff is not None:
        options["coeff"] = args.coeff
    if args.seed is not None:
        options["seed"] = args.seed
    if args.max_terms is not None:
        options["max_terms"] = args.max_terms
    if args.points is not None:
        options["points"] = args.points
    return JobConfig(**options)


def _read_pair(args) -> tuple[str, str]:
    if args.file:
        try:
            with open(args.file, encoding="utf-8") as handle:
                lines = [line.strip() for line in handle if line.strip()]
        except OSError as exc:
            raise ConfigError(f"Não foi possível ler {args.file}: {exc}") from exc
        if len(lines) != 2:
            raise ConfigError("Arquivo deve conter exatamente duas linhas: S e T")
        return lines[0], lines[1]

    if args.left is None or args.right is None:
        raise ConfigError("Informe --left e --right, ou --file")
    return args.left, args.right


def _print_step(step):
    print(step, file=sys.stderr)


def _run(args):
    config = _job_config(args)
    trace = _print_step if config.trace else None

    if args.command == "straighten":
        left, right = _read_pair(args)
        return cmd_straighten(config, left, right, trace=trace)
    if args.command == "enumerate":
        return cmd_enumerate(config, args.shape)
    if args.command == "verify":
        return cmd_verify(config, args.degree)
    return cmd_paper_examples(config)


def _write(output: str, path):
    if path is None:
        print(output)
        return
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(output + "\n")


def main(argv=None) -> int:
    dictConfig(settings.LOGGING)
    args = build_parser().parse_args(argv)

    try:
        result = _run(args)
    except (DomainError, ConfigError) as exc:
        print(f"erro: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except VerificationError as exc:
        print(f"verificação falhou: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except CapExceededError as exc:
        print(f"limite excedido: {exc} ({exc.count} > {exc.cap})", file=sys.stderr)
        return EXIT_CAP
    except Exception:
        logger.exception(f"[CLI] Falha inesperada em {args.command}")
        raise

    _write(result.output, args.out)
    return EXIT_OK if result.ok else EXIT_VERIFY
