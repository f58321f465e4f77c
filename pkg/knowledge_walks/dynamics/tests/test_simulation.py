from fractions import Fraction

import numpy as np
import pytest

from knowledge_walks.dynamics.params import DynamicsParams
from knowledge_walks.dynamics.simulation import ExplorationRecord, simulate
from knowledge_walks.dynamics.tests.fixtures import place
from knowledge_walks.networks.generators import gen_barabasi_albert, gen_lattice, gen_watts_strogatz
from knowledge_walks.networks.graph import Graph, build_graph
from knowledge_walks.networks.metrics import epsilon_series, epsilon_total, make_regions, region_exploration
from knowledge_walks.networks.tests.fixtures import complete_graph
from knowledge_walks.utils.constants import UNDISCOVERED


def discovery_distribution(graph: Graph, start: int, steps: int, alpha: int = 2) -> dict[int, Fraction]:
    """
    Точное распределение числа открытых узлов одиночным блужданием за ``steps``
    шагов: перебор всех путей с весами alpha^-f.
    """
    outcomes: dict[int, Fraction] = {}
    frontier = [(start, {start: 1}, Fraction(1))]
    for _ in range(steps):
        step = []
        for position, visits, probability in frontier:
            neighbors = [int(node) for node in graph.neighbors(position)]
            weights = [Fraction(1, alpha ** visits.get(node, 0)) for node in neighbors]
            total = sum(weights)
            for node, weight in zip(neighbors, weights):
                step.append((node, {**visits, node: visits.get(node, 0) + 1}, probability * weight / total))
        frontier = step
    for _, visits, probability in frontier:
        discovered = len(visits) - 1
        outcomes[discovered] = outcomes.get(discovered, Fraction(0)) + probability
    return outcomes


def assert_record_invariants(record: ExplorationRecord, graph: Graph) -> None:
    series = epsilon_series(record)
    assert (record.epsilon >= 0).all()
    assert (np.diff(series) >= 0).all()
    assert series[-1] + record.num_placements <= graph.n
    later = record.first_visit[record.first_visit > 0]
    assert np.array_equal(np.bincount(later, minlength=record.num_iterations + 1)[1:], record.epsilon)
    assert record.num_discovered == record.num_placements + series[-1]


def discovery_frequencies(graph: Graph, start: int, realizations: int) -> dict[int, float]:
    params = DynamicsParams(num_agents=1, iterations=4, gamma=0.0, d_eta=0.0)
    counts: dict[int, int] = {}
    for seed in range(realizations):
        record = simulate(graph, params, np.random.default_rng(seed), population=place(start))
        discovered = epsilon_total(record, 4)
        counts[discovered] = counts.get(discovered, 0) + 1
    return {discovered: count / realizations for discovered, count in counts.items()}


def assert_matches_enumeration(graph: Graph, start: int, realizations: int, sigmas: float, floor: float) -> None:
    exact = discovery_distribution(graph, start, 4)
    observed = discovery_frequencies(graph, start, realizations)

    assert sum(exact.values()) == 1
    for discovered, probability in exact.items():
        sigma = float(probability * (1 - probability) / realizations) ** 0.5
        assert observed.get(discovered, 0.0) == pytest.approx(float(probability), abs=sigmas * sigma + floor)
    assert set(observed) <= set(exact)


# Single-agent walk

ENUMERATION_CASES = pytest.mark.parametrize(
    "graph, start",
    [(complete_graph(5), 0), (gen_lattice(3), 0), (gen_lattice(3), 4)],
    ids=["K5", "lattice-corner", "lattice-center"],
)


@ENUMERATION_CASES
def test_single_agent_discovery_matches_path_enumeration(graph: Graph, start: int) -> None:
    """Тест распределение числа открытий за 4 шага совпадает с перебором всех путей."""
    assert_matches_enumeration(graph, start, realizations=3000, sigmas=4, floor=1e-3)


@pytest.mark.slow
@ENUMERATION_CASES
def test_single_agent_discovery_matches_path_enumeration_full_size(graph: Graph, start: int) -> None:
    """Тест на 10^5 реализаций частоты открытий лежат в пределах 3 сигм от перебора путей."""
    assert_matches_enumeration(graph, start, realizations=100_000, sigmas=3, floor=0.0)


def test_single_agent_complete_graph_first_step_always_discovers() -> None:
    """Тест на K5 первый шаг всегда открывает новый узел и в регионах пересчитывается из first_visit."""
    graph = complete_graph(5)
    params = DynamicsParams(num_agents=1, iterations=4, seed=8)

    record = simulate(graph, params, population=place(0))

    assert record.epsilon[0] == 1
    assert record.first_visit[0] == 0
    regions = make_regions(np.arange(5, dtype=float), 5)
    counts = region_exploration(record, regions, 4).counts
    assert counts.tolist() == [int(record.first_visit[node] != UNDISCOVERED) for node in range(5)]


# Jump semantics


def test_gamma_zero_never_jumps() -> None:
    """Тест при gamma = 0 прыжков нет."""
    record = simulate(gen_lattice(6), DynamicsParams(gamma=0.0, num_agents=10, iterations=50, seed=1))

    assert record.jump_events.sum() == 0


def test_gamma_one_always_jumps(num_agents: int = 8) -> None:
    """Тест при gamma = 1 каждый ход агента является прыжком."""
    record = simulate(gen_lattice(6), DynamicsParams(gamma=1.0, num_agents=num_agents, iterations=30, seed=2))

    assert (record.jump_events == num_agents).all()


def test_jump_count_is_binomial(num_agents: int = 50, iterations: int = 200, gamma: float = 0.3) -> None:
    """Тест общее число прыжков согласуется с биномиальным распределением."""
    params = DynamicsParams(gamma=gamma, num_agents=num_agents, iterations=iterations, seed=3)

    record = simulate(gen_lattice(10), params)

    trials = num_agents * iterations
    sigma = (trials * gamma * (1 - gamma)) ** 0.5
    assert abs(record.jump_events.sum() - trials * gamma) < 5 * sigma


def test_jump_arrival_counts_as_visit() -> None:
    """Тест прибытие прыжком увеличивает счётчик посещений так же, как шаг."""
    population = place(0)
    params = DynamicsParams(gamma=1.0, num_agents=1, iterations=12, seed=4)

    simulate(gen_lattice(4), params, population=population)

    assert population[0].total_visits == 1 + params.iterations


def test_single_agent_excluding_itself_jumps_uniformly(iterations: int = 400) -> None:
    """Тест одиночный агент без собственного поля прыгает равномерно и открывает все узлы."""
    params = DynamicsParams(gamma=1.0, num_agents=1, iterations=iterations, seed=5)

    record = simulate(gen_lattice(3), params)

    assert record.num_discovered == 9


def test_single_agent_with_own_field_prefers_current_region(iterations: int = 300) -> None:
    """Тест с собственным полем и большой tau агент остаётся в своём узле."""
    params = DynamicsParams(gamma=1.0, tau=50.0, num_agents=1, iterations=iterations, seed=6, exclude_self=False)
    population = place(0)

    record = simulate(gen_lattice(4), params, population=population)

    assert record.num_discovered == 1
    assert population[0].visits == {0: 1 + iterations}


def test_isolated_agent_idles_without_jumps() -> None:
    """Тест агент на изолированном узле при gamma = 0 стоит на месте."""
    population = place(2)
    params = DynamicsParams(gamma=0.0, num_agents=1, iterations=10)

    record = simulate(build_graph(3, [(0, 1)]), params, population=population)

    assert record.epsilon.sum() == 0
    assert population[0].visits == {2: 1}
    assert record.first_visit.tolist() == [UNDISCOVERED, UNDISCOVERED, 0]


# Records


@pytest.mark.parametrize(
    "graph, params",
    [
        (gen_lattice(8), DynamicsParams(gamma=0.0, num_agents=5, iterations=100, seed=7)),
        (gen_barabasi_albert(200, 3, seed=1), DynamicsParams(gamma=0.5, num_agents=20, iterations=80, seed=8)),
        (gen_watts_strogatz(150, 4, 0.05, seed=2), DynamicsParams(gamma=0.9, d_eta=0.5, iterations=40, seed=9)),
    ],
)
def test_record_invariants_hold(graph: Graph, params: DynamicsParams) -> None:
    """Тест кривая открытий неубывающая, не превышает N и согласована с first_visit."""
    record = simulate(graph, params)

    assert record.num_iterations == params.iterations
    assert len(record.epsilon) == len(record.jump_events) == params.iterations
    assert_record_invariants(record, graph)


def test_simulate_is_deterministic() -> None:
    """Тест одинаковые сеть и параметры дают одинаковую запись."""
    graph = gen_barabasi_albert(100, 2, seed=3)
    params = DynamicsParams(gamma=0.4, num_agents=10, iterations=60, seed=10)

    assert simulate(graph, params) == simulate(graph, params)


def test_simulate_different_seed_changes_record() -> None:
    """Тест другое зерно меняет запись."""
    graph = gen_lattice(10)
    first = simulate(graph, DynamicsParams(gamma=0.4, num_agents=10, iterations=60, seed=10))
    second = simulate(graph, DynamicsParams(gamma=0.4, num_agents=10, iterations=60, seed=11))

    assert first != second


def test_record_dict_round_trip() -> None:
    """Тест запись восстанавливается из словаря."""
    record = simulate(gen_lattice(5), DynamicsParams(gamma=0.2, num_agents=4, iterations=20, seed=12))

    payload = record.to_dict()

    assert ExplorationRecord.from_dict(payload) == record
    assert payload["num_placements"] == record.num_placements
