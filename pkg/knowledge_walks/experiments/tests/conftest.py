import pytest

from knowledge_walks.experiments.models import SweepRun
from knowledge_walks.experiments.tests.factories import SweepRunFactory
from knowledge_walks.networks.models import Network
from knowledge_walks.users.models import User


@pytest.fixture
def sweep_run(user: User, network: Network) -> SweepRun:
    return SweepRunFactory(network=network, created_by=user, updated_by=user)
