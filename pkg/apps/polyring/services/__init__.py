"""
Módulo de serviços do anel de polinômios.

Exporta as construções (Commands) e as avaliações (Queries).
"""

# COMMANDS - Construção
from apps.polyring.services.commands import (
    bideterminant,
    constant,
    det_poly,
    gamma_poly,
    minor,
    variable,
)

# QUERIES - Leitura
from apps.polyring.services.queries import (
    evaluate,
    evaluate_bideterminant,
    format_polynomial,
)
