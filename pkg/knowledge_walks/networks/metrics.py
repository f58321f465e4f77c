"""
Метрики производительности и топологии: накопленное число открытий,
доступность (экспонента энтропии h-шагового случайного блуждания),
расстояние Чебышёва до центра решётки и разбиение узлов на регионы.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
import pandas as pd
from scipy import sparse
from scipy.special import entr

from knowledge_walks.networks.enums import RegionMeasure
from knowledge_walks.networks.graph import Graph
from knowledge_walks.utils.constants import DEFAULT_ACCESSIBILITY_H
from knowledge_walks.utils.exceptions import DynamicsParameterError

if TYPE_CHECKING:
    from knowledge_walks.dynamics.simulation import ExplorationRecord

logger = logging.getLogger(__name__)

ACCESSIBILITY_BLOCK = 256


@dataclass(frozen=True)
class AccessibilityVector:
    h: int
    values: np.ndarray

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"node_id": np.arange(len(self.values)), "value": self.values})


@dataclass(frozen=True)
class RegionPartition:
    """
    Упорядоченные по значению измерения непересекающиеся группы узлов.

    Атрибуты:
        bins: Массивы узлов каждого региона
        bin_stat: Среднее значение измерения в регионе
    """

    bins: list[np.ndarray]
    bin_stat: np.ndarray

    @property
    def sizes(self) -> np.ndarray:
        return np.array([len(nodes) for nodes in self.bins], dtype=np.int64)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "bin_index": np.arange(len(self.bins)),
                "mean_value": self.bin_stat,
                "size": self.sizes,
            }
        )


@dataclass(frozen=True)
class RegionExploration:
    counts: np.ndarray
    fractions: np.ndarray


def epsilon_total(record: ExplorationRecord, t_a: int) -> int:
    """Число узлов, открытых на итерациях 1..t_a; открытия при размещении не входят."""
    if not 0 <= t_a <= record.num_iterations:
        raise DynamicsParameterError(f"t_a must lie in [0, {record.num_iterations}], got {t_a}")
    return int(record.epsilon[:t_a].sum())


def epsilon_series(record: ExplorationRecord) -> np.ndarray:
    """Накопленная кривая открытий, элемент t-1 равен epsilon_total(record, t)."""
    return np.cumsum(record.epsilon, dtype=np.int64)


def transition_matrix(graph: Graph) -> sparse.csr_array:
    """Матрица переходов равномерного блуждания, строки изолированных узлов нулевые."""
    degrees = graph.degrees.astype(np.float64)
    inverse = np.divide(1.0, degrees, out=np.zeros_like(degrees), where=degrees > 0)
    return sparse.csr_array(sparse.diags_array(inverse) @ graph.adjacency)


def walk_probabilities(graph: Graph, source: int, h: int) -> np.ndarray:
    """
    Распределение положения равномерного случайного блуждания через h шагов.

    Raises:
        DynamicsParameterError: h < 1 или изолированный источник
    """
    if h < 1:
        raise DynamicsParameterError(f"walk horizon must be >= 1, got {h}")
    if not 0 <= source < graph.n:
        raise DynamicsParameterError(f"source {source} outside [0, {graph.n})")
    if graph.degree(source) == 0:
        raise DynamicsParameterError(f"walk source {source} is isolated")
    transposed = transition_matrix(graph).T.tocsr()
    probabilities = np.zeros(graph.n)
    probabilities[source] = 1.0
    for _ in range(h):
        probabilities = transposed @ probabilities
    return probabilities


def accessibility(graph: Graph, h: int = DEFAULT_ACCESSIBILITY_H) -> AccessibilityVector:
    """
    Доступность каждого узла: exp энтропии распределения h-шагового блуждания.

    Распределения считаются блоками источников; изолированные узлы получают 1.
    """
    if h < 1:
        raise DynamicsParameterError(f"walk horizon must be >= 1, got {h}")
    transposed = transition_matrix(graph).T.tocsr()
    values = np.ones(graph.n)
    for start in range(0, graph.n, ACCESSIBILITY_BLOCK):
        sources = np.arange(start, min(start + ACCESSIBILITY_BLOCK, graph.n))
        block = np.zeros((graph.n, len(sources)))
        block[sources, np.arange(len(sources))] = 1.0
        for _ in range(h):
            block = transposed @ block
        values[sources] = np.exp(entr(block).sum(axis=0))
    return AccessibilityVector(h=h, values=values)


def lattice_side(num_nodes: int) -> int:
    side = math.isqrt(num_nodes)
    if side * side != num_nodes:
        raise DynamicsParameterError(f"{num_nodes} nodes do not form a square lattice")
    return side


def chebyshev_center_distance(side: int) -> np.ndarray:
    """Расстояние Чебышёва от узла решётки (построчная нумерация) до среднего положения узлов."""
    if side < 1:
        raise DynamicsParameterError(f"lattice side must be >= 1, got {side}")
    rows, cols = np.divmod(np.arange(side * side), side)
    center = (side - 1) / 2.0
    return np.maximum(np.abs(rows - center), np.abs(cols - center))


def make_regions(values: np.ndarray, num_bins: int, nodes: np.ndarray | None = None) -> RegionPartition:
    """
    Квантильное разбиение: узлы сортируются по (значение, номер) и делятся на
    ``num_bins`` групп, размеры которых отличаются не более чем на единицу.

    Если все значения одинаковы, возвращается один регион и пишется предупреждение.
    """
    values = np.asarray(values, dtype=np.float64)
    nodes = np.arange(len(values)) if nodes is None else np.asarray(nodes, dtype=np.int64)
    subset = values[nodes]
    if not 1 <= num_bins <= len(nodes):
        raise DynamicsParameterError(f"num_bins must lie in [1, {len(nodes)}], got {num_bins}")
    if num_bins > 1 and np.ptp(subset) == 0:
        logger.warning(
            "All %d values equal %.6g: using a single region instead of %d", len(nodes), subset[0], num_bins
        )
        num_bins = 1

    order = np.lexsort((nodes, subset))
    bins = [nodes[chunk] for chunk in np.array_split(order, num_bins)]
    bin_stat = np.array([values[chunk].mean() for chunk in bins])
    return RegionPartition(bins=bins, bin_stat=bin_stat)


def region_exploration(record: ExplorationRecord, regions: RegionPartition, t_cut: int) -> RegionExploration:
    """Сколько узлов каждого региона открыто к итерации t_cut, включая размещение."""
    if not 0 <= t_cut <= record.num_iterations:
        raise DynamicsParameterError(f"t_cut must lie in [0, {record.num_iterations}], got {t_cut}")
    discovered = (record.first_visit >= 0) & (record.first_visit <= t_cut)
    counts = np.array([int(discovered[nodes].sum()) for nodes in regions.bins], dtype=np.int64)
    return RegionExploration(counts=counts, fractions=counts / regions.sizes)


def region_values(graph: Graph, measure: str, h: int = DEFAULT_ACCESSIBILITY_H) -> np.ndarray:
    """Значения измерения, по которому узлы делятся на регионы."""
    if measure == RegionMeasure.CHEBYSHEV:
        return chebyshev_center_distance(lattice_side(graph.n))
    if measure == RegionMeasure.ACCESSIBILITY:
        return accessibility(graph, h).values
    raise DynamicsParameterError(f"no region measure {measure!r}")


def build_regions(graph: Graph, measure: str, num_bins: int, h: int = DEFAULT_ACCESSIBILITY_H) -> RegionPartition:
    regions = make_regions(region_values(graph, measure, h), num_bins)
    logger.info("Built %d regions by %s, sizes %s", len(regions.bins), measure, regions.sizes.tolist())
    return regions
