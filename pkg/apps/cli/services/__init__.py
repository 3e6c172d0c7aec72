"""
Módulo de serviços da linha de comando.

Exporta os comandos straighten, enumerate, verify e paper-examples.
"""

# COMMANDS
from apps.cli.services.commands import (
    cmd_enumerate,
    cmd_paper_examples,
    cmd_straighten,
    cmd_verify,
)
