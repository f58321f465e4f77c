"""
Детерминированные генераторы сетевых моделей.

Решётки, WS и BA строятся средствами networkx и переводятся в ``Graph``;
Waxman и сеть с сообществами собираются векторно на numpy. Все случайные
величины берутся из генератора, созданного из ``seed`` внутри вызова, поэтому
одинаковая спецификация даёт одинаковый граф.
"""

from __future__ import annotations

import inspect
import logging
import math
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from typing import Any

import networkx as nx
import numpy as np
from scipy import integrate, optimize

from knowledge_walks.networks.enums import NetworkModel
from knowledge_walks.networks.graph import Graph, build_graph, largest_component
from knowledge_walks.utils.exceptions import GeneratorSpecError, InfeasibleSpecError

logger = logging.getLogger(__name__)

# Сеть с сообществами
DEFAULT_DEGREE_EXPONENT = 2.5
DEFAULT_K_MIN = 3
DEFAULT_K_MAX = 32
DEFAULT_SIZE_SPREAD = 0.2
DEFAULT_REPAIR_ROUNDS = 10
DEFAULT_PARTITION_RETRIES = 50


@dataclass(frozen=True)
class GeneratorSpec:
    """
    Описание сети: модель, параметры модели и зерно.

    Параметры проверяются генератором соответствующей модели до построения.
    """

    kind: str
    params: Mapping[str, Any] = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", str(self.kind))

    def to_dict(self) -> dict:
        return {"kind": self.kind, "params": dict(self.params), "seed": self.seed}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> GeneratorSpec:
        return cls(kind=data["kind"], params=dict(data.get("params", {})), seed=int(data.get("seed", 0)))


def _require(condition: bool, message: str):
    if not condition:
        raise GeneratorSpecError(message)


def gen_lattice(side: int) -> Graph:
    """Квадратная решётка L×L с открытой границей, узел (i, j) имеет индекс i*L + j."""
    _require(side >= 2, f"lattice side must be >= 2, got {side}")
    return Graph.from_networkx(nx.grid_2d_graph(side, side))


def gen_toroidal_lattice(side: int) -> Graph:
    """Решётка L×L с периодической границей; при L < 3 появились бы кратные рёбра."""
    _require(side >= 3, f"toroidal lattice side must be >= 3, got {side}")
    return Graph.from_networkx(nx.grid_2d_graph(side, side, periodic=True))


def gen_watts_strogatz(n: int, k_ring: int, p_rewire: float, seed: int = 0) -> Graph:
    """
    Кольцо с k_ring ближайшими соседями и перемонтированием одного конца ребра
    с вероятностью ``p_rewire``. Число рёбер равно n * k_ring / 2 при любом p.
    """
    _require(k_ring > 0 and k_ring % 2 == 0, f"k_ring must be a positive even number, got {k_ring}")
    _require(k_ring < n, f"k_ring must be smaller than n, got k_ring={k_ring}, n={n}")
    _require(0.0 <= p_rewire <= 1.0, f"p_rewire must lie in [0, 1], got {p_rewire}")
    return Graph.from_networkx(nx.watts_strogatz_graph(n, k_ring, p_rewire, seed=seed))


def gen_barabasi_albert(n: int, m: int, seed: int = 0) -> Graph:
    """Рост с предпочтительным присоединением от затравочной клики на m + 1 узлах."""
    _require(1 <= m < n, f"BA requires 1 <= m < n, got m={m}, n={n}")
    seed_clique = nx.complete_graph(m + 1)
    return Graph.from_networkx(nx.barabasi_albert_graph(n, m, seed=seed, initial_graph=seed_clique))


def square_distance_density(d: float) -> float:
    """Плотность расстояния между двумя равномерными точками единичного квадрата."""
    if d < 0.0 or d > math.sqrt(2.0):
        return 0.0
    if d <= 1.0:
        return 2.0 * d * (d * d - 4.0 * d + math.pi)
    arcsec = math.acos(1.0 / d)
    return 2.0 * d * (4.0 * math.sqrt(d * d - 1.0) - (d * d + 2.0 - math.pi) - 4.0 * arcsec)


def expected_waxman_kernel(length: float) -> float:
    """E[exp(-d / length)] для пары равномерных точек единичного квадрата."""

    def integrand(d: float) -> float:
        return square_distance_density(d) * math.exp(-d / length)

    inner, _ = integrate.quad(integrand, 0.0, 1.0)
    outer, _ = integrate.quad(integrand, 1.0, math.sqrt(2.0))
    return inner + outer


def waxman_expected_degree(n: int, alpha: float, beta: float, scale: float = 1.0) -> float:
    return (n - 1) * beta * expected_waxman_kernel(alpha * scale)


def calibrate_waxman_beta(n: int, alpha: float, scale: float, target_degree: float) -> float:
    """
    Подбирает beta так, чтобы ожидаемая средняя степень до выделения компоненты
    равнялась ``target_degree``.

    Raises:
        InfeasibleSpecError: если для цели нужна beta > 1
    """
    _require(target_degree > 0, f"target_degree must be positive, got {target_degree}")
    kernel = expected_waxman_kernel(alpha * scale)

    def excess(beta: float) -> float:
        return (n - 1) * beta * kernel - target_degree

    if excess(1.0) < 0:
        raise InfeasibleSpecError(
            f"Waxman target degree {target_degree} unreachable for n={n}: "
            f"maximum expected degree is {(n - 1) * kernel:.4f}"
        )
    beta = optimize.brentq(excess, 0.0, 1.0, xtol=1e-14)
    logger.info("Calibrated Waxman beta=%.6g for n=%d, target degree %.4g", beta, n, target_degree)
    return beta


def gen_waxman(
    n: int,
    alpha: float = 1.0,
    beta: float = 0.015,
    scale: float = 1.0,
    seed: int = 0,
    target_degree: float | None = None,
) -> Graph:
    """
    Пространственная сеть Waxman на единичном квадрате.

    Пара соединяется с вероятностью ``beta * exp(-d / (alpha * scale))``. При
    заданном ``target_degree`` beta калибруется аналитически. Возвращается
    наибольшая компонента связности.
    """
    _require(n >= 2, f"Waxman requires n >= 2, got {n}")
    _require(alpha > 0 and scale > 0, "Waxman alpha and scale must be positive")
    if target_degree is not None:
        beta = calibrate_waxman_beta(n, alpha, scale, target_degree)
    _require(0.0 < beta <= 1.0, f"Waxman beta must lie in (0, 1], got {beta}")

    rng = np.random.default_rng(seed)
    points = rng.random((n, 2))
    length = alpha * scale
    blocks = []
    for u in range(n - 1):
        delta = points[u + 1 :] - points[u]
        prob = beta * np.exp(-np.hypot(delta[:, 0], delta[:, 1]) / length)
        hits = np.flatnonzero(rng.random(len(prob)) < prob) + u + 1
        if len(hits):
            blocks.append(np.column_stack((np.full(len(hits), u), hits)))
    edges = np.concatenate(blocks) if blocks else np.empty((0, 2), dtype=np.int64)
    graph = build_graph(n, edges)
    logger.info("Waxman raw graph: %d nodes, %d edges, mean degree %.4f", n, graph.num_edges, graph.mean_degree)
    graph, _ = largest_component(graph)
    return graph


def truncated_power_law_mean(exponent: float, k_min: int, k_max: int) -> float:
    degrees = np.arange(k_min, k_max + 1, dtype=np.float64)
    weights = degrees**-exponent
    return float((degrees * weights).sum() / weights.sum())


def choose_k_max(exponent: float, k_min: int, target_degree: float, limit: int) -> int:
    """Наименьшее k_max, при котором среднее усечённого степенного закона ближе всего к цели."""
    candidates = range(k_min + 1, limit + 1)
    if not candidates:
        raise InfeasibleSpecError(f"no admissible k_max above k_min={k_min} below {limit}")
    means = np.array([truncated_power_law_mean(exponent, k_min, k_max) for k_max in candidates])
    if not means[0] <= target_degree <= means[-1]:
        raise InfeasibleSpecError(
            f"mean degree {target_degree} unreachable with exponent {exponent} and k_min={k_min}"
        )
    return candidates[int(np.argmin(np.abs(means - target_degree)))]


def _partition_sizes(
    n: int, n_communities: int, s_min: int, s_max: int, rng: np.random.Generator, retries: int
) -> np.ndarray:
    if not n_communities * s_min <= n <= n_communities * s_max:
        raise InfeasibleSpecError(
            f"cannot split {n} nodes into {n_communities} communities of size [{s_min}, {s_max}]"
        )
    for _ in range(retries):
        sizes = rng.integers(s_min, s_max + 1, size=n_communities - 1)
        last = n - int(sizes.sum())
        if s_min <= last <= s_max:
            return np.append(sizes, last)
    raise InfeasibleSpecError(f"no community size partition of {n} within [{s_min}, {s_max}] after {retries} retries")


def _match_stubs(
    stubs: np.ndarray,
    rng: np.random.Generator,
    existing: set[tuple[int, int]],
    membership: np.ndarray | None,
    rounds: int,
) -> tuple[list[tuple[int, int]], int]:
    """
    Случайное спаривание полурёбер. Петли, повторы и (для внешних полурёбер)
    пары внутри одного сообщества отклоняются и перемешиваются заново.
    """
    pending = stubs
    accepted: list[tuple[int, int]] = []
    for _ in range(rounds + 1):
        if len(pending) < 2:
            break
        shuffled = rng.permutation(pending)
        rejected = [int(shuffled[-1])] if len(shuffled) % 2 else []
        for u, v in shuffled[: len(shuffled) - len(shuffled) % 2].reshape(-1, 2).tolist():
            key = (u, v) if u < v else (v, u)
            if u == v or key in existing or (membership is not None and membership[u] == membership[v]):
                rejected.extend((u, v))
                continue
            existing.add(key)
            accepted.append(key)
        pending = np.array(rejected, dtype=np.int64)
    return accepted, len(pending)


def community_benchmark(
    n: int,
    n_communities: int = 2,
    mu: float = 0.2,
    gamma_deg: float = DEFAULT_DEGREE_EXPONENT,
    k_min: int = DEFAULT_K_MIN,
    k_max: int = DEFAULT_K_MAX,
    s_min: int | None = None,
    s_max: int | None = None,
    seed: int = 0,
    target_degree: float | None = None,
    repair_rounds: int = DEFAULT_REPAIR_ROUNDS,
) -> tuple[Graph, np.ndarray]:
    """
    Сеть с сообществами в духе LFR: граф и номер сообщества каждого узла.

    Степени берутся из степенного закона, усечённого до [k_min, k_max]. Доля
    (1 - mu) полурёбер узла замыкается внутри сообщества, остальные наружу; доля
    наружу округляется стохастически, чтобы средняя доля внешних рёбер равнялась mu.
    Нечётная сумма внутренних полурёбер сообщества исправляется переносом одного
    полуребра наружу, нечётная сумма внешних отбрасыванием одного полуребра.
    """
    _require(n >= 2, f"community network requires n >= 2, got {n}")
    _require(n_communities >= 1, f"n_communities must be >= 1, got {n_communities}")
    _require(0.0 < mu < 1.0, f"mu must lie in (0, 1), got {mu}")
    _require(gamma_deg > 0, f"degree exponent must be positive, got {gamma_deg}")
    _require(1 <= k_min, f"k_min must be >= 1, got {k_min}")

    base_size = n / n_communities
    if target_degree is not None:
        s_max_hint = s_max if s_max is not None else math.ceil((1 + DEFAULT_SIZE_SPREAD) * base_size)
        k_max = choose_k_max(gamma_deg, k_min, target_degree, limit=s_max_hint - 1)
    _require(k_min <= k_max, f"k_min must not exceed k_max, got {k_min} > {k_max}")
    if n_communities == 1:
        s_min = s_max = n
    if s_min is None:
        s_min = max(k_min + 1, math.floor((1 - DEFAULT_SIZE_SPREAD) * base_size))
    if s_max is None:
        s_max = max(k_max + 1, math.ceil((1 + DEFAULT_SIZE_SPREAD) * base_size))
    _require(s_min > k_min, f"s_min must exceed k_min, got s_min={s_min}, k_min={k_min}")
    _require(s_max > k_max, f"s_max must exceed k_max, got s_max={s_max}, k_max={k_max}")
    _require(s_min <= s_max, f"s_min must not exceed s_max, got {s_min} > {s_max}")

    rng = np.random.default_rng(seed)
    sizes = _partition_sizes(n, n_communities, s_min, s_max, rng, DEFAULT_PARTITION_RETRIES)
    membership = rng.permutation(np.repeat(np.arange(n_communities), sizes))

    support = np.arange(k_min, k_max + 1)
    weights = support.astype(np.float64) ** -gamma_deg
    degrees = rng.choice(support, size=n, p=weights / weights.sum())

    share = mu * degrees
    external = np.floor(share).astype(np.int64)
    external += rng.random(n) < share - external
    internal = degrees - external
    capacity = sizes[membership] - 1
    internal = np.minimum(internal, capacity)

    for community in range(n_communities):
        members = np.flatnonzero(membership == community)
        if internal[members].sum() % 2:
            donors = members[internal[members] > 0]
            node = donors[rng.integers(len(donors))]
            internal[node] -= 1
            external[node] += 1
    if external.sum() % 2:
        donors = np.flatnonzero(external > 0)
        external[donors[rng.integers(len(donors))]] -= 1

    existing: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    unmatched = 0
    for community in range(n_communities):
        members = np.flatnonzero(membership == community)
        accepted, left = _match_stubs(np.repeat(members, internal[members]), rng, existing, None, repair_rounds)
        edges.extend(accepted)
        unmatched += left
    accepted, left = _match_stubs(np.repeat(np.arange(n), external), rng, existing, membership, repair_rounds)
    edges.extend(accepted)
    unmatched += left
    if unmatched:
        logger.info("Community network: %d stubs left unmatched after %d repair rounds", unmatched, repair_rounds)

    graph = build_graph(n, np.array(edges, dtype=np.int64).reshape(-1, 2))
    return graph, membership


def gen_community(
    n: int,
    n_communities: int = 2,
    mu: float = 0.2,
    gamma_deg: float = DEFAULT_DEGREE_EXPONENT,
    k_min: int = DEFAULT_K_MIN,
    k_max: int = DEFAULT_K_MAX,
    s_min: int | None = None,
    s_max: int | None = None,
    seed: int = 0,
    target_degree: float | None = None,
    repair_rounds: int = DEFAULT_REPAIR_ROUNDS,
) -> Graph:
    """Сеть с сообществами без разметки узлов."""
    graph, _ = community_benchmark(
        n, n_communities, mu, gamma_deg, k_min, k_max, s_min, s_max, seed, target_degree, repair_rounds
    )
    return graph


GENERATORS: dict[str, Callable[..., Graph]] = {
    NetworkModel.LA.value: gen_lattice,
    NetworkModel.TLA.value: gen_toroidal_lattice,
    NetworkModel.WS.value: gen_watts_strogatz,
    NetworkModel.BA.value: gen_barabasi_albert,
    NetworkModel.WAX.value: gen_waxman,
    NetworkModel.CN.value: gen_community,
}


def generator_parameters(kind: str) -> list[str]:
    """Имена параметров модели, кроме зерна."""
    if kind not in GENERATORS:
        raise GeneratorSpecError(f"unknown network model {kind!r}")
    return [name for name in inspect.signature(GENERATORS[kind]).parameters if name != "seed"]


def generate(spec: GeneratorSpec) -> Graph:
    """
    Строит граф по спецификации.

    Raises:
        GeneratorSpecError: неизвестная модель, лишний или отсутствующий параметр
        InfeasibleSpecError: параметры нереализуемы
    """
    allowed = generator_parameters(spec.kind)
    unknown = sorted(set(spec.params) - set(allowed))
    if unknown:
        raise GeneratorSpecError(f"unknown parameters for {spec.kind}: {', '.join(unknown)}")
    function = GENERATORS[spec.kind]
    kwargs = dict(spec.params)
    if "seed" in inspect.signature(function).parameters:
        kwargs["seed"] = spec.seed
    try:
        inspect.signature(function).bind(**kwargs)
    except TypeError as exc:
        raise GeneratorSpecError(f"{spec.kind}: {exc}") from None

    graph = function(**kwargs)
    logger.info("Generated %s (seed %d): %d nodes, %d edges", spec.kind, spec.seed, graph.n, graph.num_edges)
    return graph


PRESETS: dict[str, GeneratorSpec] = {
    "la": GeneratorSpec(NetworkModel.LA, {"side": 100}),
    "tla": GeneratorSpec(NetworkModel.TLA, {"side": 100}),
    "ws-1": GeneratorSpec(NetworkModel.WS, {"n": 10000, "k_ring": 4, "p_rewire": 0.001}),
    "ws-2": GeneratorSpec(NetworkModel.WS, {"n": 10000, "k_ring": 4, "p_rewire": 0.005}),
    "ba": GeneratorSpec(NetworkModel.BA, {"n": 10000, "m": 3}),
    "wax": GeneratorSpec(NetworkModel.WAX, {"n": 10000, "alpha": 1.0, "scale": 1.0, "target_degree": 6.02}),
    "cn": GeneratorSpec(NetworkModel.CN, {"n": 10000, "n_communities": 2, "mu": 0.2, "target_degree": 5.63}),
}


def preset(name: str, seed: int = 0) -> GeneratorSpec:
    try:
        base = PRESETS[name]
    except KeyError:
        raise GeneratorSpecError(f"unknown preset {name!r}, choose from {', '.join(PRESETS)}") from None
    return GeneratorSpec(kind=base.kind, params=dict(base.params), seed=seed)
