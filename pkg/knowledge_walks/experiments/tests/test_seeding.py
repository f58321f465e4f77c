import itertools

from knowledge_walks.experiments.seeding import MASK64, mix64, network_seed, realization_seed
from knowledge_walks.experiments.tests.fixtures import sweep_config


def test_realization_seeds_are_distinct(realizations: int = 200) -> None:
    """Тест зёрна различны для разных точек сетки и номеров реализаций."""
    keys = [f"gamma={gamma};tau={tau}" for gamma, tau in itertools.product([0.0, 0.1, 0.5], [1.0, 2.0])]

    seeds = {realization_seed(0, key, index) for key in keys for index in range(realizations)}

    assert len(seeds) == len(keys) * realizations
    assert all(0 <= seed <= MASK64 for seed in seeds)


def test_realization_seed_depends_on_base_seed() -> None:
    """Тест базовое зерно меняет зёрна реализаций."""
    assert realization_seed(0, "gamma=0.5", 3) != realization_seed(1, "gamma=0.5", 3)


def test_seeds_do_not_depend_on_axis_order() -> None:
    """Тест зёрна точек не меняются при перестановке значений на осях сетки."""
    forward = sweep_config(grid={"gamma": [0.0, 0.5, 0.9], "tau": [1.0, 3.0], "d_eta": [0.1]})
    backward = sweep_config(grid={"gamma": [0.9, 0.0, 0.5], "tau": [3.0, 1.0], "d_eta": [0.1]})

    def seeds(config) -> dict[str, int]:
        return {point.key: realization_seed(config.base_seed, point.key, 0) for point in config.grid_points()}

    assert seeds(forward) == seeds(backward)


def test_network_seed_is_shared_by_realization() -> None:
    """Тест зерно сети зависит только от зерна спецификации и номера реализации."""
    assert network_seed(5, 0) == network_seed(5, 0)
    assert len({network_seed(5, index) for index in range(100)}) == 100
    assert network_seed(5, 0) != network_seed(6, 0)


def test_mix64_stays_in_range() -> None:
    """Тест перемешивание возвращает 64-битное значение."""
    assert all(0 <= mix64(value) <= MASK64 for value in (0, 1, MASK64, 1 << 63))
