"""
Módulo de serviços de endireitamento GL(n).

Exporta as funções de Commands (reescrita) e Queries (leitura).
"""

# COMMANDS - Reescrita
from apps.gl_straighten.services.commands import (
    GLStraightener,
    gl_straighten,
    one_switch_expand,
    two_column_straighten,
)

# QUERIES - Leitura
from apps.gl_straighten.services.queries import (
    count_gl_standard_pairs,
    evaluate_combination,
    format_certificate,
    parse_certificate,
    symbolic_poly,
)
