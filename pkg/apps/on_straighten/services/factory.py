# apps/on_straighten/services/factory.py

from config import settings

from apps.core.domains import parse_domain
from apps.gl_straighten.services.commands import GLStraightener
from apps.on_straighten.models import Mode
from apps.on_straighten.services.commands import ONStraightener


def get_straightener(
    *, n: int, mode=Mode.ON, domain=None, trace=None, max_terms=None, fuel=None
):
    """
    Factory oficial para criar o motor de endireitamento.
    Centraliza limites e domínio padrão lidos de config.settings.

    Raises:
        DomainError: modo desconhecido ou n < 3 em O(n)/GO(n)
        CoefficientDomainError: BIDET_COEFF inválido
    """
    mode = Mode.parse(mode)
    options = {
        "max_terms": max_terms or settings.STRAIGHTEN_MAX_TERMS,
        "fuel": fuel or settings.STRAIGHTEN_FUEL,
        "trace": trace,
    }
    if domain is None:
        domain = parse_domain(settings.DEFAULT_COEFF)

    if mode == Mode.GL:
        return GLStraightener(n, domain, **options)
    return ONStraightener(n, domain, mode=mode, **options)
