from pathlib import Path

import pytest
from rest_framework.exceptions import ValidationError

from knowledge_walks.experiments.config import GridPoint, load_sweep_config, parse_sweep_config
from knowledge_walks.experiments.tests.fixtures import MINIMAL_TOML, sweep_config, write_toml
from knowledge_walks.networks.enums import NetworkModel, RegionMeasure


def errors_of(data: dict) -> dict:
    with pytest.raises(ValidationError) as exc_info:
        parse_sweep_config(data)
    return exc_info.value.detail


# Parsing Tests


def test_load_minimal_toml(tmp_path: Path) -> None:
    """Тест минимальный файл серии заполняет недостающие оси значениями по умолчанию."""
    config = load_sweep_config(write_toml(tmp_path / "minimal.toml", MINIMAL_TOML))

    assert config.name == "minimal"
    assert config.realizations == 2
    assert config.iterations == 8
    assert config.grid["gamma"] == (0.0, 0.5)
    assert config.grid["alpha"] == (2.0,)
    assert config.grid["num_agents"] == (3,)
    assert config.network.spec.kind == NetworkModel.LA
    assert config.regions.measure == RegionMeasure.OFF
    assert config.output.stem == "minimal"


def test_load_broken_toml_reports_config_error(tmp_path: Path) -> None:
    """Тест синтаксическая ошибка TOML превращается в ошибку проверки с ключом config."""
    path = write_toml(tmp_path / "broken.toml", "realizations = = 3\n")

    with pytest.raises(ValidationError) as exc_info:
        load_sweep_config(path)

    assert "config" in exc_info.value.detail


def test_edge_list_path_is_relative_to_config_file(tmp_path: Path) -> None:
    """Тест относительный путь к списку рёбер отсчитывается от каталога файла серии."""
    text = 'realizations = 1\niterations = 5\n[network]\nedge_list = "graphs/net.txt"\n'

    config = load_sweep_config(write_toml(tmp_path / "edges.toml", text))

    assert config.network.edge_list == tmp_path / "graphs" / "net.txt"
    assert config.network.label == "net"


def test_preset_with_param_override() -> None:
    """Тест пресет с переопределённым параметром сохраняет остальные параметры пресета."""
    config = sweep_config(network={"preset": "ws-1", "params": {"n": 500}, "seed": 4})

    assert config.network.spec.kind == NetworkModel.WS
    assert config.network.spec.params["n"] == 500
    assert config.network.spec.params["k_ring"] == 4
    assert config.network.spec.seed == 4
    assert config.network.label == "ws-1"


def test_t_cut_defaults_to_iterations_when_shorter() -> None:
    """Тест t_cut по умолчанию не превышает числа итераций."""
    config = sweep_config(regions={"measure": "lattice-chebyshev", "bins": 2})

    assert config.regions.t_cut == 12
    assert config.regions.enabled


# Validation Tests


def test_unknown_top_level_key_is_named() -> None:
    """Тест неизвестный ключ верхнего уровня указывается в ошибке."""
    detail = errors_of({"network": {"model": "la", "params": {"side": 4}}, "realisations": 3})

    assert "realisations" in detail


def test_unknown_grid_axis_is_named() -> None:
    """Тест неизвестная ось сетки указывается в ошибке по пути grid."""
    detail = errors_of({"network": {"model": "la", "params": {"side": 4}}, "grid": {"beta": [1.0]}})

    assert "beta" in detail["grid"]


@pytest.mark.parametrize(
    "data, key",
    [
        ({"network": {"model": "la", "params": {"side": 4}}, "grid": {"gamma": [1.5]}}, "grid"),
        ({"network": {"model": "la", "params": {"side": 4}}, "grid": {"alpha": [0.0]}}, "grid"),
        ({"network": {"model": "la", "params": {"side": 4}}, "grid": {"gamma": []}}, "grid"),
        ({"network": {"model": "la", "params": {"side": 4}}, "realizations": 0}, "realizations"),
        ({"network": {"model": "la", "params": {"side": 4}}, "iterations": 0}, "iterations"),
        ({"network": {"model": "la", "params": {"wrong": 4}}}, "network"),
        ({"network": {"model": "la", "preset": "ba"}}, "network"),
        ({"network": {"model": "file"}}, "network"),
        ({"grid": {"gamma": [0.1]}}, "network"),
    ],
    ids=["gamma", "alpha", "empty-axis", "realizations", "iterations", "params", "two-sources", "file", "no-network"],
)
def test_invalid_config_names_offending_key(data: dict, key: str) -> None:
    """Тест ошибка проверки адресуется ключом с некорректным значением."""
    assert key in errors_of(data)


def test_t_cut_beyond_iterations_is_rejected() -> None:
    """Тест t_cut больше числа итераций отклоняется."""
    detail = errors_of(
        {
            "network": {"model": "la", "params": {"side": 4}},
            "iterations": 10,
            "regions": {"measure": "lattice-chebyshev", "t_cut": 11},
        }
    )

    assert "t_cut" in detail["regions"]


@pytest.mark.parametrize(
    "data",
    [
        {"network": {"edge_list": "net.txt"}, "regenerate_network": True},
        {
            "network": {"model": "la", "params": {"side": 4}},
            "regenerate_network": True,
            "regions": {"measure": "lattice-chebyshev"},
        },
    ],
    ids=["edge-list", "regions"],
)
def test_regenerate_network_conflicts(data: dict) -> None:
    """Тест пересоздание сети несовместимо со списком рёбер и с анализом регионов."""
    assert "regenerate_network" in errors_of(data)


# Grid Tests


def test_grid_points_cover_product_in_canonical_order() -> None:
    """Тест точки сетки образуют декартово произведение в порядке канонического ключа."""
    config = sweep_config(grid={"gamma": [0.9, 0.1], "tau": [2.0, 1.0], "d_eta": [0.1]})

    points = config.grid_points()

    assert len(points) == 4
    assert [point.key for point in points] == sorted(point.key for point in points)
    assert {(point.gamma, point.tau) for point in points} == {(0.9, 2.0), (0.9, 1.0), (0.1, 2.0), (0.1, 1.0)}


def test_grid_point_builds_dynamics_params() -> None:
    """Тест точка сетки передаёт значения осей в параметры динамики."""
    point = GridPoint(alpha=3.0, d_eta=0.2, eta_common=1.0, eta_influential=5.0, gamma=0.4, num_agents=7, tau=2.0)

    params = point.dynamics_params(iterations=50, seed=9)

    assert (params.alpha, params.gamma, params.num_agents, params.iterations, params.seed) == (3.0, 0.4, 7, 50, 9)
    assert "gamma=0.4" in point.key


def test_config_hash_ignores_output_settings() -> None:
    """Тест хеш конфигурации не зависит от настроек вывода и меняется вместе с сеткой."""
    first = sweep_config(grid={"gamma": [0.0, 0.5]}, output={"stem": "a"})
    second = sweep_config(grid={"gamma": [0.0, 0.5]}, output={"stem": "b", "formats": ["json"]})
    third = sweep_config(grid={"gamma": [0.0, 0.6]})

    assert first.config_hash == second.config_hash
    assert first.config_hash != third.config_hash


# Bundled config Tests

BUNDLED_SWEEPS = sorted((Path(__file__).resolve().parents[3] / "sweeps").glob("*.toml"))


@pytest.mark.parametrize("path", BUNDLED_SWEEPS, ids=[path.stem for path in BUNDLED_SWEEPS])
def test_bundled_sweep_configs_are_valid(path: Path) -> None:
    """Тест все поставляемые файлы серий проходят проверку."""
    config = load_sweep_config(path)

    assert config.name == path.stem
    assert config.iterations == 1000
    assert len(config.grid_points()) >= 4


def test_fig_ba_gamma_matches_desk_scale_protocol() -> None:
    """Тест серия fig_ba_gamma задаёт BA на 2000 узлах, 100 агентов и 50 реализаций."""
    config = load_sweep_config(Path(__file__).resolve().parents[3] / "sweeps" / "fig_ba_gamma.toml")

    assert config.network.spec.kind == NetworkModel.BA
    assert dict(config.network.spec.params) == {"n": 2000, "m": 3}
    assert config.realizations == 50
    assert config.grid["num_agents"] == (100,)
    assert {0.0, 0.9} <= set(config.grid["gamma"])
