"""
Поле влияния агентов и выбор точки прыжка.

Вклад агента ``a`` в узел ``i`` равен ``eta_a * exp(-tau * d(i, pos_a))``,
недостижимые узлы получают ноль. Поля агентов складываются.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from knowledge_walks.dynamics.agents import AgentPopulation, sample_index
from knowledge_walks.networks.graph import Graph, distance_matrix
from knowledge_walks.utils.constants import UNREACHABLE
from knowledge_walks.utils.exceptions import DynamicsParameterError

CANCELLATION_RTOL = 1e-6


@dataclass(frozen=True)
class InfluenceField:
    values: np.ndarray

    @property
    def total(self) -> float:
        return float(self.values.sum())


def distance_kernel(distances: np.ndarray, tau: float) -> np.ndarray:
    """exp(-tau * d) с нулём для недостижимых узлов."""
    reachable = distances != UNREACHABLE
    return np.where(reachable, np.exp(-tau * np.where(reachable, distances, 0)), 0.0)


def compute_field(
    graph: Graph,
    agents: AgentPopulation,
    exclude: int | None,
    tau: float,
    positions: np.ndarray | None = None,
) -> InfluenceField:
    """
    Суперпозиция полей всех агентов, кроме ``exclude``.

    ``positions`` задаёт снимок положений; по умолчанию берутся текущие.
    Расстояния считаются один раз на каждый занятый узел.
    """
    if tau < 0:
        raise DynamicsParameterError(f"tau must be non-negative, got {tau}")
    positions = agents.positions if positions is None else np.asarray(positions, dtype=np.int64)
    members = [index for index in range(len(agents)) if index != exclude]
    values = np.zeros(graph.n)
    if not members:
        return InfluenceField(values)
    sources, rows = np.unique(positions[members], return_inverse=True)
    kernels = distance_kernel(distance_matrix(graph, sources), tau)
    for index, row in zip(members, rows):
        values += agents[index].eta * kernels[row]
    return InfluenceField(values)


class FieldSnapshot:
    """
    Поле на снимке положений начала итерации.

    Суммарное поле считается один раз, поле без прыгающего агента получается
    вычитанием его вклада. В узлах, где вклад исключённого агента составляет
    почти всё поле (остаток не больше ``CANCELLATION_RTOL`` от суммы), разность
    теряет точность, и там поле пересчитывается напрямую по остальным агентам.
    """

    def __init__(self, graph: Graph, positions: np.ndarray, etas: np.ndarray, tau: float):
        sources, self.rows = np.unique(positions, return_inverse=True)
        self.kernels = distance_kernel(distance_matrix(graph, sources), tau)
        self.etas = etas
        self.weights = np.bincount(self.rows, weights=etas, minlength=len(sources))
        self.total = self.weights @ self.kernels

    def field_for(self, exclude: int | None) -> InfluenceField:
        if exclude is None:
            return InfluenceField(self.total)
        row = self.rows[exclude]
        values = self.total - self.etas[exclude] * self.kernels[row]
        suspect = np.flatnonzero((values <= CANCELLATION_RTOL * self.total) & (self.total > 0))
        if len(suspect):
            weights = self.weights.copy()
            others = (self.rows == row) & (np.arange(len(self.etas)) != exclude)
            weights[row] = self.etas[others].sum()
            values[suspect] = weights @ self.kernels[:, suspect]
        return InfluenceField(values)


def jump_probabilities(field: InfluenceField) -> np.ndarray:
    total = field.total
    if total <= 0:
        return np.full(len(field.values), 1.0 / len(field.values))
    return field.values / total


def jump_destination(field: InfluenceField, rng: np.random.Generator) -> int:
    """Узел, выбранный пропорционально полю; при нулевом поле равномерно."""
    cumulative = np.cumsum(field.values)
    if cumulative[-1] <= 0:
        return int(rng.integers(len(field.values)))
    return sample_index(cumulative, rng)
