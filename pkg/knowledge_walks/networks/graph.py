"""
Неизменяемый неориентированный простой граф и примитивы обхода.

Узлы задаются плотными целыми индексами ``[0, n)``. Смежность хранится в формате CSR
(``indptr``/``indices``), списки соседей отсортированы. Массивы после
построения помечаются как только для чтения, поэтому один экземпляр можно
безопасно разделять между параллельными реализациями.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import networkx as nx
import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from knowledge_walks.utils.constants import UNREACHABLE
from knowledge_walks.utils.exceptions import GraphFormatError, NodeIndexError

logger = logging.getLogger(__name__)

NODES_HEADER = "# nodes:"


@dataclass(frozen=True, eq=False)
class Graph:
    """
    Неориентированный простой граф.

    Атрибуты:
        n: Число узлов
        indptr: Границы списков соседей, длина n + 1
        indices: Конкатенация отсортированных списков соседей
        dropped: Сколько петель и дублей рёбер отброшено при построении
    """

    n: int
    indptr: np.ndarray
    indices: np.ndarray
    dropped: int = 0

    def __post_init__(self):
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.num_edges})"

    @property
    def num_edges(self) -> int:
        return len(self.indices) // 2

    @cached_property
    def degrees(self) -> np.ndarray:
        degrees = np.diff(self.indptr)
        degrees.setflags(write=False)
        return degrees

    def degree(self, node: int) -> int:
        return int(self.indptr[node + 1] - self.indptr[node])

    def neighbors(self, node: int) -> np.ndarray:
        return self.indices[self.indptr[node] : self.indptr[node + 1]]

    @property
    def mean_degree(self) -> float:
        if self.n == 0:
            return 0.0
        return 2.0 * self.num_edges / self.n

    def edge_array(self) -> np.ndarray:
        """Рёбра (u, v) с u < v в лексикографическом порядке, форма (|E|, 2)."""
        rows = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        mask = rows < self.indices
        return np.column_stack((rows[mask], self.indices[mask]))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, v in self.edge_array():
            yield int(u), int(v)

    @cached_property
    def adjacency(self) -> sparse.csr_array:
        data = np.ones(len(self.indices), dtype=np.float64)
        return sparse.csr_array((data, self.indices.copy(), self.indptr.copy()), shape=(self.n, self.n))

    def summary(self) -> dict:
        degrees = self.degrees
        components = csgraph.connected_components(self.adjacency, directed=False)[0] if self.n else 0
        return {
            "num_nodes": self.n,
            "num_edges": self.num_edges,
            "mean_degree": self.mean_degree,
            "min_degree": int(degrees.min()) if self.n else 0,
            "max_degree": int(degrees.max()) if self.n else 0,
            "num_components": int(components),
            "dropped_edges": self.dropped,
        }

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    @classmethod
    def from_networkx(cls, graph: nx.Graph, ordering: Sequence | None = None) -> Graph:
        """
        Переводит граф networkx в плотную нумерацию.

        Без ``ordering`` узлы нумеруются в порядке сортировки меток, поэтому
        координаты решётки ``(i, j)`` переходят в построчный индекс ``i * L + j``.
        """
        nodes = list(ordering) if ordering is not None else sorted(graph.nodes())
        index = {node: position for position, node in enumerate(nodes)}
        edges = [(index[u], index[v]) for u, v in graph.edges()]
        return build_graph(len(nodes), edges)


@dataclass(frozen=True)
class DistanceField:
    """
    Расстояния в прыжках от источника; недостижимые узлы помечены ``UNREACHABLE``.
    """

    source: int
    dist: np.ndarray

    @property
    def reachable(self) -> np.ndarray:
        return self.dist != UNREACHABLE

    @property
    def max_distance(self) -> int:
        reachable = self.dist[self.reachable]
        return int(reachable.max()) if len(reachable) else 0


def build_graph(n: int, edges: Iterable[tuple[int, int]] | np.ndarray) -> Graph:
    """
    Строит простой неориентированный граф.

    Петли и повторные пары (в любом направлении) отбрасываются, их количество
    пишется в лог и сохраняется в ``Graph.dropped``.

    Raises:
        NodeIndexError: если конец ребра вне ``[0, n)``
    """
    pairs = np.asarray(edges if isinstance(edges, np.ndarray) else list(edges), dtype=np.int64).reshape(-1, 2)
    out_of_range = (pairs < 0) | (pairs >= n)
    if out_of_range.any():
        row = int(np.flatnonzero(out_of_range.any(axis=1))[0])
        raise NodeIndexError((int(pairs[row, 0]), int(pairs[row, 1])), n)

    loops = pairs[:, 0] == pairs[:, 1]
    canonical = np.sort(pairs[~loops], axis=1)
    unique = np.unique(canonical, axis=0) if len(canonical) else canonical
    dropped = len(pairs) - len(unique)
    if dropped:
        logger.info("Dropped %d self-loops/duplicate edges out of %d pairs", dropped, len(pairs))

    rows = np.concatenate((unique[:, 0], unique[:, 1]))
    cols = np.concatenate((unique[:, 1], unique[:, 0]))
    order = np.lexsort((cols, rows))
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(rows, minlength=n), out=indptr[1:])
    return Graph(n=n, indptr=indptr, indices=cols[order].astype(np.int64), dropped=dropped)


def distance_matrix(graph: Graph, sources: Sequence[int] | np.ndarray) -> np.ndarray:
    """Расстояния BFS от нескольких источников, форма (len(sources), n)."""
    sources = np.asarray(sources, dtype=np.int64)
    if len(sources) == 0:
        return np.empty((0, graph.n), dtype=np.int64)
    if ((sources < 0) | (sources >= graph.n)).any():
        raise IndexError(f"source outside [0, {graph.n})")
    raw = csgraph.shortest_path(graph.adjacency, method="D", directed=False, unweighted=True, indices=sources)
    raw = np.atleast_2d(raw)
    dist = np.full(raw.shape, UNREACHABLE, dtype=np.int64)
    finite = np.isfinite(raw)
    dist[finite] = raw[finite].astype(np.int64)
    return dist


def bfs_distances(graph: Graph, source: int) -> DistanceField:
    return DistanceField(source=source, dist=distance_matrix(graph, [source])[0])


def component_labels(graph: Graph) -> np.ndarray:
    if graph.n == 0:
        return np.empty(0, dtype=np.int64)
    return csgraph.connected_components(graph.adjacency, directed=False)[1]


def induced_subgraph(graph: Graph, nodes: np.ndarray) -> tuple[Graph, dict[int, int]]:
    """Подграф на ``nodes`` с плотной перенумерацией в порядке возрастания старых индексов."""
    nodes = np.sort(np.asarray(nodes, dtype=np.int64))
    new_index = np.full(graph.n, -1, dtype=np.int64)
    new_index[nodes] = np.arange(len(nodes))
    edges = graph.edge_array()
    keep = (new_index[edges[:, 0]] >= 0) & (new_index[edges[:, 1]] >= 0)
    subgraph = build_graph(len(nodes), new_index[edges[keep]])
    return subgraph, {int(old): int(new) for new, old in enumerate(nodes)}


def largest_component(graph: Graph) -> tuple[Graph, dict[int, int]]:
    """
    Наибольшая компонента связности с картой старый→новый индекс.

    При равенстве размеров выбирается компонента с наименьшим минимальным
    исходным индексом узла.
    """
    if graph.n == 0:
        return graph, {}
    labels = component_labels(graph)
    sizes = np.bincount(labels)
    min_node = np.full(len(sizes), graph.n, dtype=np.int64)
    np.minimum.at(min_node, labels, np.arange(graph.n))
    best = min(range(len(sizes)), key=lambda label: (-sizes[label], min_node[label]))
    subgraph, mapping = induced_subgraph(graph, np.flatnonzero(labels == best))
    if subgraph.n < graph.n:
        logger.info("Largest component keeps %d of %d nodes", subgraph.n, graph.n)
    return subgraph, mapping


def parse_edge_list(lines: Iterable[str | bytes], largest: bool = False, source: str = "<stream>") -> Graph:
    """
    Разбирает список рёбер: по паре целых на строку, строки с ``#`` считаются комментариями.

    Строки в байтах декодируются как UTF-8.

    Заголовок ``# nodes: N`` (пишется ``save_edge_list``) задаёт число узлов,
    иначе оно равно максимальному индексу плюс один. Ориентированные списки
    симметризуются.

    Raises:
        GraphFormatError: неверное число токенов, нецелый токен или не UTF-8 (с номером строки)
    """
    pairs: list[tuple[int, int]] = []
    declared_nodes: int | None = None
    for line_number, raw in enumerate(lines, start=1):
        line = _decode(raw, line_number).strip()
        if not line:
            continue
        if line.startswith("#"):
            if line.lower().startswith(NODES_HEADER):
                declared_nodes = _parse_int(line[len(NODES_HEADER) :].strip(), line_number)
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 2 tokens, got {len(tokens)}", line_number)
        u, v = (_parse_int(token, line_number) for token in tokens)
        if u < 0 or v < 0:
            raise GraphFormatError("negative node index", line_number)
        pairs.append((u, v))

    max_index = max((max(pair) for pair in pairs), default=-1)
    n = declared_nodes if declared_nodes is not None else max_index + 1
    graph = build_graph(n, pairs)
    logger.info("Loaded %s: %d nodes, %d edges", source, graph.n, graph.num_edges)
    if largest:
        graph, _ = largest_component(graph)
    return graph


def load_edge_list(path: str | Path, largest: bool = False) -> Graph:
    with open(path, "rb") as handle:
        return parse_edge_list(handle, largest=largest, source=str(path))


def format_edge_list(graph: Graph) -> str:
    """Канонический список рёбер (u < v, по возрастанию) с заголовком числа узлов."""
    lines = [f"{NODES_HEADER} {graph.n}", f"# edges: {graph.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in graph.edge_array())
    return "\n".join(lines) + "\n"


def save_edge_list(graph: Graph, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_edge_list(graph))
    return path


def _decode(raw: str | bytes, line_number: int) -> str:
    if isinstance(raw, str):
        return raw
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError:
        raise GraphFormatError("invalid UTF-8", line_number) from None


def _parse_int(token: str, line_number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"non-integer token {token!r}", line_number) from None
