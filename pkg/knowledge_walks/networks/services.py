"""
Операции над сохранёнными сетями: построение по спецификации, запись
списка рёбер в хранилище и обратная загрузка графа.
"""

import logging

from django.core.files.base import ContentFile
from django.db import transaction

from knowledge_walks.networks.enums import NetworkModel
from knowledge_walks.networks.generators import GeneratorSpec, generate
from knowledge_walks.networks.graph import Graph, format_edge_list, parse_edge_list
from knowledge_walks.networks.models import Network
from knowledge_walks.utils.constants import EDGE_LIST_SUFFIX

logger = logging.getLogger(__name__)


def store_graph(network: Network, graph: Graph):
    """Заполняет сводку графа и сохраняет список рёбер в файловое хранилище."""
    network.num_nodes = graph.n
    network.num_edges = graph.num_edges
    network.mean_degree = graph.mean_degree
    network.dropped_edges = graph.dropped
    network.edge_list.save(f"{network.uuid}{EDGE_LIST_SUFFIX}", ContentFile(format_edge_list(graph)), save=False)
    network.save()


@transaction.atomic
def create_generated_network(spec: GeneratorSpec, name: str = "", user=None) -> Network:
    graph = generate(spec)
    network = Network(
        name=name or spec.kind,
        model=spec.kind,
        params=dict(spec.params),
        seed=spec.seed,
        created_by=user,
        updated_by=user,
    )
    store_graph(network, graph)
    logger.info("Stored network %s (%s): %d nodes, %d edges", network.uuid, spec.kind, graph.n, graph.num_edges)
    return network


def load_network_graph(network: Network) -> Graph:
    with network.edge_list.open("rb") as handle:
        return parse_edge_list(handle, source=network.edge_list.name)


def network_spec(network: Network) -> GeneratorSpec | None:
    if not network.is_generated:
        return None
    return GeneratorSpec(network.model, network.params, network.seed)


@transaction.atomic
def create_uploaded_network(uploaded, name: str = "", largest: bool = False, user=None) -> Network:
    """Сеть из загруженного списка рёбер; при ``largest`` остаётся наибольшая компонента."""
    graph = parse_edge_list(uploaded, largest=largest, source=uploaded.name)
    network = Network(
        name=name or uploaded.name,
        model=NetworkModel.FILE,
        params={"largest_component": largest},
        created_by=user,
        updated_by=user,
    )
    store_graph(network, graph)
    return network
