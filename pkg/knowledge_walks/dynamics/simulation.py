"""
Многоагентный процесс: на каждом шаге агент с вероятностью gamma прыгает
в узел, выбранный по полю влияния остальных агентов, иначе делает шаг
самоизбегающего блуждания.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Any

import numpy as np

from knowledge_walks.dynamics.agents import AgentPopulation, init_agents, tsaw_step
from knowledge_walks.dynamics.field import FieldSnapshot, jump_destination
from knowledge_walks.dynamics.params import DynamicsParams
from knowledge_walks.networks.graph import Graph
from knowledge_walks.utils.constants import UNDISCOVERED

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ExplorationRecord:
    """
    Результат одной реализации.

    Атрибуты:
        first_visit: Итерация первого посещения узла, 0 для стартовых, -1 если не открыт
        epsilon: Число новых узлов на итерациях 1..T
        jump_events: Число прыжков на итерациях 1..T
        num_iterations: T
    """

    first_visit: np.ndarray
    epsilon: np.ndarray
    jump_events: np.ndarray
    num_iterations: int

    def __eq__(self, other):
        if not isinstance(other, ExplorationRecord):
            return NotImplemented
        return (
            self.num_iterations == other.num_iterations
            and np.array_equal(self.first_visit, other.first_visit)
            and np.array_equal(self.epsilon, other.epsilon)
            and np.array_equal(self.jump_events, other.jump_events)
        )

    __hash__ = None  # type: ignore[assignment]

    @property
    def num_placements(self) -> int:
        return int((self.first_visit == 0).sum())

    @property
    def num_discovered(self) -> int:
        return int((self.first_visit != UNDISCOVERED).sum())

    def to_dict(self) -> dict[str, Any]:
        return {
            "num_iterations": self.num_iterations,
            "num_placements": self.num_placements,
            "first_visit": self.first_visit.tolist(),
            "epsilon": self.epsilon.tolist(),
            "jump_events": self.jump_events.tolist(),
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> ExplorationRecord:
        return cls(
            first_visit=np.asarray(data["first_visit"], dtype=np.int64),
            epsilon=np.asarray(data["epsilon"], dtype=np.int64),
            jump_events=np.asarray(data["jump_events"], dtype=np.int64),
            num_iterations=int(data["num_iterations"]),
        )


def simulate(
    graph: Graph,
    params: DynamicsParams,
    rng: np.random.Generator | None = None,
    population: AgentPopulation | None = None,
) -> ExplorationRecord:
    """
    Прогоняет ``params.iterations`` итераций.

    Агенты ходят по порядку индексов. Поле прыжков строится по положениям на
    начало итерации и лениво, только если в итерации был хотя бы один прыжок.
    Прибытие после прыжка увеличивает счётчик посещений так же, как шаг.
    """
    rng = np.random.default_rng(params.seed) if rng is None else rng
    population = init_agents(graph, params, rng) if population is None else population

    first_visit = np.full(graph.n, UNDISCOVERED, dtype=np.int64)
    first_visit[population.positions] = 0
    epsilon = np.zeros(params.iterations, dtype=np.int64)
    jump_events = np.zeros(params.iterations, dtype=np.int64)
    etas = population.etas

    for t in range(1, params.iterations + 1):
        snapshot = population.positions
        field = None
        for index, agent in enumerate(population):
            if rng.random() < params.gamma:
                if field is None:
                    field = FieldSnapshot(graph, snapshot, etas, params.tau)
                node = jump_destination(field.field_for(index if params.exclude_self else None), rng)
                agent.arrive(node)
                jump_events[t - 1] += 1
            else:
                node = tsaw_step(agent, graph, rng, params.alpha)
                if node is None:
                    continue
            if first_visit[node] == UNDISCOVERED:
                first_visit[node] = t
                epsilon[t - 1] += 1

    record = ExplorationRecord(
        first_visit=first_visit, epsilon=epsilon, jump_events=jump_events, num_iterations=params.iterations
    )
    logger.debug(
        "Simulated %d iterations: %d of %d nodes discovered, %d jumps",
        params.iterations,
        record.num_discovered,
        graph.n,
        int(jump_events.sum()),
    )
    return record
