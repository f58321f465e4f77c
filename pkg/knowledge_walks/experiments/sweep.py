"""
Серия Монте-Карло: для каждой точки сетки параметров запускается
``realizations`` независимых реализаций, кривые открытий агрегируются.

Реализации распределяются по пулу процессов. Результаты собираются в
каноническом порядке (точка, реализация), а зёрна не зависят от порядка
выполнения, поэтому итог не зависит от числа процессов.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

import numpy as np

from knowledge_walks.dynamics.simulation import ExplorationRecord, simulate
from knowledge_walks.experiments.config import GridPoint, NetworkSource, SweepConfig
from knowledge_walks.experiments.seeding import network_seed, realization_seed
from knowledge_walks.networks.generators import GeneratorSpec, generate
from knowledge_walks.networks.graph import Graph, load_edge_list
from knowledge_walks.networks.metrics import RegionPartition, build_regions, epsilon_series, region_exploration
from knowledge_walks.utils.exceptions import KnowledgeWalksError, SweepError

logger = logging.getLogger(__name__)

STD_KIND = "population"

_worker_state: dict[str, Any] = {}


@dataclass(frozen=True)
class RealizationTask:
    point_index: int
    point: GridPoint
    realization: int
    seed: int
    network_seed: int | None = None


@dataclass(frozen=True)
class RegionStats:
    mean_count: np.ndarray
    std_count: np.ndarray
    mean_fraction: np.ndarray


@dataclass(frozen=True)
class PointResult:
    point: GridPoint
    seeds: list[int]
    mean: np.ndarray
    std: np.ndarray
    regions: RegionStats | None = None


@dataclass
class SweepResult:
    config: SweepConfig
    points: list[PointResult]
    metadata: dict[str, Any]
    regions: RegionPartition | None = None
    wall_time: float = 0.0


def build_network(source: NetworkSource, seed: int | None = None) -> Graph:
    if source.spec is not None:
        spec = source.spec if seed is None else GeneratorSpec(source.spec.kind, source.spec.params, seed)
        return generate(spec)
    if source.edge_list is None:
        raise SweepError("sweep config names no network")
    return load_edge_list(source.edge_list, largest=source.largest_component)


def aggregate_series(series: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Поточечное среднее и стандартное отклонение генеральной совокупности по строкам."""
    series = np.asarray(series, dtype=np.float64)
    if series.ndim != 2 or series.shape[0] == 0:
        raise SweepError("nothing to aggregate")
    return series.mean(axis=0), series.std(axis=0)


def aggregate(records: Sequence[ExplorationRecord]) -> tuple[np.ndarray, np.ndarray]:
    """Среднее и стандартное отклонение накопленной кривой открытий по реализациям."""
    if not records:
        raise SweepError("cannot aggregate an empty list of records")
    lengths = {record.num_iterations for record in records}
    if len(lengths) != 1:
        raise SweepError(f"records have different lengths: {sorted(lengths)}")
    return aggregate_series(np.stack([epsilon_series(record) for record in records]))


def plan_tasks(config: SweepConfig, points: list[GridPoint]) -> list[RealizationTask]:
    """
    Задачи в каноническом порядке.

    Raises:
        SweepError: если два зерна совпали или перегенерировать нечего
    """
    if config.regenerate_network and config.network.spec is None:
        raise SweepError("regenerate_network needs a generated network, not an edge list")
    spec_seed = config.network.spec.seed if config.regenerate_network else None
    tasks = [
        RealizationTask(
            point_index=index,
            point=point,
            realization=realization,
            seed=realization_seed(config.base_seed, point.key, realization),
            network_seed=network_seed(spec_seed, realization) if spec_seed is not None else None,
        )
        for index, point in enumerate(points)
        for realization in range(config.realizations)
    ]
    seen: dict[int, RealizationTask] = {}
    for task in tasks:
        if task.seed in seen:
            other = seen[task.seed]
            raise SweepError(
                f"seed collision between realization {other.realization} of {other.point.key} "
                f"and realization {task.realization}",
                task.point.key,
            )
        seen[task.seed] = task
    return tasks


def _init_worker(state: dict[str, Any]):
    _worker_state.clear()
    _worker_state.update(state)
    _regenerated_graph.cache_clear()


@lru_cache(maxsize=4)
def _regenerated_graph(seed: int) -> Graph:
    return build_network(_worker_state["network"], seed=seed)


def _run_realization(task: RealizationTask) -> tuple[np.ndarray, np.ndarray | None]:
    state = _worker_state
    try:
        graph = state["graph"] if task.network_seed is None else _regenerated_graph(task.network_seed)
        record = simulate(graph, task.point.dynamics_params(state["iterations"], task.seed))
        counts = None
        if state["regions"] is not None:
            counts = region_exploration(record, state["regions"], state["t_cut"]).counts
    except KnowledgeWalksError as exc:
        raise SweepError(f"realization {task.realization} failed: {exc}", task.point.key) from exc
    return epsilon_series(record), counts


def _execute(tasks: list[RealizationTask], state: dict[str, Any], workers: int) -> Iterator:
    if workers <= 1 or len(tasks) <= 1:
        _init_worker(state)
        try:
            yield from map(_run_realization, tasks)
        finally:
            _worker_state.clear()
        return

    chunksize = max(1, len(tasks) // (workers * 8))
    executor = ProcessPoolExecutor(max_workers=workers, initializer=_init_worker, initargs=(state,))
    try:
        yield from executor.map(_run_realization, tasks, chunksize=chunksize)
    except BaseException:
        executor.shutdown(wait=True, cancel_futures=True)
        raise
    executor.shutdown(wait=True)


def run_sweep(config: SweepConfig, graph: Graph | None = None, workers: int = 1) -> SweepResult:
    """
    Выполняет серию целиком.

    Сеть строится один раз (или берётся ``graph``); при ``regenerate_network``
    каждая реализация получает свою сеть, общую для всех точек сетки. Разбиение
    на регионы считается один раз. Частичных результатов не бывает: любая
    ошибка реализации прерывает серию с ``SweepError``.
    """
    started = time.perf_counter()
    if graph is None:
        graph = build_network(config.network)
    regions = None
    if config.regions.enabled:
        regions = build_regions(graph, config.regions.measure, config.regions.bins, config.regions.h)

    points = config.grid_points()
    tasks = plan_tasks(config, points)
    logger.info(
        "Sweep %s: %d grid points x %d realizations on %d workers",
        config.name,
        len(points),
        config.realizations,
        workers,
    )
    state = {
        "graph": graph,
        "network": config.network,
        "regions": regions,
        "iterations": config.iterations,
        "t_cut": config.regions.t_cut,
    }

    series = np.empty((len(tasks), config.iterations), dtype=np.int64)
    counts = np.empty((len(tasks), len(regions.bins)), dtype=np.int64) if regions else None
    for row, (curve, region_counts) in enumerate(_execute(tasks, state, workers)):
        series[row] = curve
        if counts is not None:
            counts[row] = region_counts
        if (row + 1) % config.realizations == 0:
            point = tasks[row].point
            logger.info("Finished grid point %d/%d: %s", row // config.realizations + 1, len(points), point.key)

    results = []
    for index, point in enumerate(points):
        rows = slice(index * config.realizations, (index + 1) * config.realizations)
        mean, std = aggregate_series(series[rows])
        region_stats = None
        if counts is not None:
            mean_count, std_count = aggregate_series(counts[rows])
            region_stats = RegionStats(mean_count, std_count, mean_count / regions.sizes)
        results.append(
            PointResult(
                point=point,
                seeds=[task.seed for task in tasks[rows]],
                mean=mean,
                std=std,
                regions=region_stats,
            )
        )

    metadata = {
        "name": config.name,
        "config_hash": config.config_hash,
        "network": {"label": config.network.label, "source": config.network.to_dict(), **graph.summary()},
        "realizations": config.realizations,
        "iterations": config.iterations,
        "base_seed": config.base_seed,
        "num_agents": list(config.grid["num_agents"]),
        "regenerate_network": config.regenerate_network,
        "std": STD_KIND,
        "varying_axes": config.varying_optional_axes,
        "regions": (
            {
                "measure": str(config.regions.measure),
                "h": config.regions.h,
                "t_cut": config.regions.t_cut,
                "sizes": regions.sizes.tolist(),
                "bin_mean_value": regions.bin_stat.tolist(),
            }
            if regions
            else None
        ),
    }
    wall_time = time.perf_counter() - started
    logger.info("Sweep %s finished in %.1f s", config.name, wall_time)
    return SweepResult(config=config, points=results, metadata=metadata, regions=regions, wall_time=wall_time)
