"""
Módulo de serviços de endireitamento O(n).

Exporta as funções de Commands (reescrita), Relations (somas de relação)
e a factory do motor.
"""

# COMMANDS - Reescrita
from apps.on_straighten.services.commands import (
    ONStraightener,
    fix_os1,
    fix_os2,
    fix_os3,
    on_straighten,
    one_column_complement,
    reduce_tall_shape,
)

# FACTORY
from apps.on_straighten.services.factory import get_straightener

# RELATIONS - Somas de relação
from apps.on_straighten.services.relations import (
    relation_lhs,
    relation_rhs,
    verify_relation,
)
