"""
Fixtures e configurações para testes com pytest.

As classes de teste são unittest.TestCase; as fixtures abaixo servem
às funções de teste soltas (tests_integration.py, tests_comprehensive.py).
"""

import pytest

from apps.core.domains import QQ, ZHALF, PrimeFieldDomain
from apps.group_oracle.services import point_batch
from apps.on_straighten.models import Mode
from apps.tableaux.domain.rules import alphabet


@pytest.fixture
def qq():
    """Fixture para o domínio ℚ."""
    return QQ


@pytest.fixture
def zhalf():
    """Fixture para o domínio ℤ[1/2]."""
    return ZHALF


@pytest.fixture
def f5():
    """Fixture para o corpo 𝔽₅."""
    return PrimeFieldDomain(5)


@pytest.fixture
def alphabet_6():
    """Fixture para o alfabeto ℐ(6)."""
    return alphabet(6)


@pytest.fixture(scope="session")
def on_points():
    """Fixture com pontos de O(n) por dimensão (n = 3..7), semente fixa."""
    return {n: point_batch(n, 8, 7, Mode.ON) for n in range(3, 8)}


@pytest.fixture(scope="session")
def go_points():
    """Fixture com pontos de GO(n) por dimensão (n = 3..7), semente fixa."""
    return {n: point_batch(n, 8, 7, Mode.GO) for n in range(3, 8)}


# Marcadores customizados para testes
def pytest_configure(config):
    """Registra marcadores customizados para testes."""
    config.addinivalue_line(
        "markers", "slow: marca teste como lento"
    )
    config.addinivalue_line(
        "markers", "integration: marca teste como teste de integração"
    )
    config.addinivalue_line(
        "markers", "unit: marca teste como teste unitário"
    )
