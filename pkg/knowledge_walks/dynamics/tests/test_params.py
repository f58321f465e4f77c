from typing import Any

import pytest

from knowledge_walks.dynamics.params import MAX_SEED, DynamicsParams, round_half_up
from knowledge_walks.utils.exceptions import DynamicsParameterError


@pytest.mark.parametrize(
    "overrides",
    [
        {"alpha": 0.0},
        {"gamma": -0.1},
        {"gamma": 1.5},
        {"tau": -1.0},
        {"eta_common": -1.0},
        {"eta_influential": -0.5},
        {"d_eta": 1.1},
        {"num_agents": 0},
        {"iterations": 0},
        {"seed": -1},
        {"seed": MAX_SEED + 1},
    ],
)
def test_dynamics_params_invalid_values_raise(overrides: dict[str, Any]) -> None:
    """Тест параметры вне допустимых диапазонов отклоняются с именем параметра."""
    name = next(iter(overrides))

    with pytest.raises(DynamicsParameterError, match=name):
        DynamicsParams(**overrides)


def test_dynamics_params_boundary_values_accepted() -> None:
    """Тест граничные значения gamma, tau и d_eta допустимы."""
    params = DynamicsParams(gamma=1.0, tau=0.0, d_eta=0.0, eta_common=0.0, seed=MAX_SEED)

    assert params.num_influential == 0


@pytest.mark.parametrize(
    "d_eta, num_agents, expected",
    [(0.1, 100, 10), (0.025, 100, 3), (0.5, 1, 1), (0.0, 50, 0), (1.0, 7, 7)],
)
def test_num_influential_rounds_half_up(d_eta: float, num_agents: int, expected: int) -> None:
    """Тест число влиятельных агентов округляется половиной вверх."""
    assert DynamicsParams(d_eta=d_eta, num_agents=num_agents).num_influential == expected


def test_round_half_up() -> None:
    """Тест округление 2.5 даёт 3, а 2.4999 даёт 2."""
    assert round_half_up(2.5) == 3
    assert round_half_up(2.4999) == 2


def test_dynamics_params_dict_round_trip_ignores_unknown_keys() -> None:
    """Тест параметры восстанавливаются из словаря, лишние ключи игнорируются."""
    params = DynamicsParams(gamma=0.3, tau=2.0, seed=12, exclude_self=False)

    assert DynamicsParams.from_dict({**params.to_dict(), "label": "x"}) == params
