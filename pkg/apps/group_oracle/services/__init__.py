"""
Módulo de serviços do oráculo de pontos do grupo.

Exporta a geração de pontos (Commands) e as avaliações (Queries).
"""

# COMMANDS - Geração de pontos
from apps.group_oracle.services.commands import (
    cayley_point,
    point_batch,
    random_go_point,
    random_on_point,
    random_so_point,
    reduce_point,
)

# QUERIES - Avaliação e posto
from apps.group_oracle.services.queries import (
    basis_suite,
    evaluate_on_point,
    evaluation_rank,
    standard_basis,
    verify_on_group,
)
