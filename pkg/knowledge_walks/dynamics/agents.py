"""
Агенты с памятью посещений и шаг истинно самоизбегающего блуждания.

Вероятность перейти к соседу убывает как ``alpha ** -f``, где ``f`` равно
числу прошлых посещений соседнего узла этим агентом.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field

import numpy as np

from knowledge_walks.dynamics.params import DynamicsParams
from knowledge_walks.networks.graph import Graph
from knowledge_walks.utils.constants import DEFAULT_ALPHA
from knowledge_walks.utils.exceptions import DynamicsParameterError


@dataclass
class AgentState:
    position: int
    eta: float
    visits: dict[int, int] = field(default_factory=dict)

    def arrive(self, node: int):
        self.position = node
        self.visits[node] = self.visits.get(node, 0) + 1

    def visit_count(self, node: int) -> int:
        return self.visits.get(node, 0)

    @property
    def total_visits(self) -> int:
        return sum(self.visits.values())


class AgentPopulation:
    """Упорядоченный набор агентов; порядок задаёт очерёдность ходов."""

    def __init__(self, agents: list[AgentState]):
        self.agents = agents

    def __len__(self) -> int:
        return len(self.agents)

    def __iter__(self) -> Iterator[AgentState]:
        return iter(self.agents)

    def __getitem__(self, index: int) -> AgentState:
        return self.agents[index]

    @property
    def positions(self) -> np.ndarray:
        return np.array([agent.position for agent in self.agents], dtype=np.int64)

    @property
    def etas(self) -> np.ndarray:
        return np.array([agent.eta for agent in self.agents], dtype=np.float64)


def init_agents(graph: Graph, params: DynamicsParams, rng: np.random.Generator) -> AgentPopulation:
    """
    Размещает агентов равномерно с возвращением и выбирает влиятельных.

    Ровно ``round(d_eta * num_agents)`` (округление половины вверх) агентов
    получают ``eta_influential``. Стартовый узел считается посещённым один раз.
    """
    if graph.n == 0:
        raise DynamicsParameterError("cannot place agents on an empty graph")
    positions = rng.integers(0, graph.n, size=params.num_agents)
    influential = rng.choice(params.num_agents, size=params.num_influential, replace=False)
    etas = np.full(params.num_agents, params.eta_common, dtype=np.float64)
    etas[influential] = params.eta_influential
    return AgentPopulation(
        [
            AgentState(position=int(position), eta=float(eta), visits={int(position): 1})
            for position, eta in zip(positions, etas)
        ]
    )


def neighbor_visits(agent: AgentState, graph: Graph) -> np.ndarray:
    return np.array([agent.visit_count(int(node)) for node in graph.neighbors(agent.position)], dtype=np.int64)


def tsaw_weights(agent: AgentState, graph: Graph, alpha: float = DEFAULT_ALPHA) -> np.ndarray:
    """Веса ``alpha ** -f`` соседей текущего узла по памяти этого агента."""
    return np.power(float(alpha), -neighbor_visits(agent, graph).astype(np.float64))


def tsaw_probabilities(agent: AgentState, graph: Graph, alpha: float = DEFAULT_ALPHA) -> np.ndarray:
    """
    Нормированные веса перехода. Показатели сдвигаются на минимальный счётчик,
    чтобы при длинной памяти веса не уходили в ноль.
    """
    visits = neighbor_visits(agent, graph)
    if len(visits) == 0:
        return np.empty(0)
    weights = np.power(float(alpha), -(visits - visits.min()).astype(np.float64))
    return weights / weights.sum()


def sample_index(cumulative: np.ndarray, rng: np.random.Generator) -> int:
    """Индекс по накопленным неотрицательным весам; нулевые веса не выбираются."""
    draw = rng.random() * cumulative[-1]
    return min(int(np.searchsorted(cumulative, draw, side="right")), len(cumulative) - 1)


def tsaw_step(agent: AgentState, graph: Graph, rng: np.random.Generator, alpha: float = DEFAULT_ALPHA) -> int | None:
    """
    Один шаг блуждания. Возвращает новый узел или ``None`` для изолированного
    узла, в этом случае агент стоит на месте и память не меняется.
    """
    neighbors = graph.neighbors(agent.position)
    if len(neighbors) == 0:
        return None
    probabilities = tsaw_probabilities(agent, graph, alpha)
    node = int(neighbors[sample_index(np.cumsum(probabilities), rng)])
    agent.arrive(node)
    return node
