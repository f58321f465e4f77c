from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import asdict, dataclass, fields
from typing import Any

from knowledge_walks.utils import constants
from knowledge_walks.utils.exceptions import DynamicsParameterError

MAX_SEED = 2**64 - 1


def round_half_up(value: float) -> int:
    return math.floor(value + 0.5)


@dataclass(frozen=True)
class DynamicsParams:
    """
    Параметры многоагентной динамики.

    Атрибуты:
        alpha: Основание экспоненциального подавления повторных визитов
        gamma: Вероятность прыжка на шаге агента
        tau: Скорость затухания поля влияния с расстоянием
        eta_common: Приспособленность обычного агента
        eta_influential: Приспособленность влиятельного агента
        d_eta: Доля влиятельных агентов
        num_agents: Число агентов
        iterations: Число итераций
        seed: Зерно генератора случайных чисел
        exclude_self: Исключать ли поле самого прыгающего агента
    """

    alpha: float = constants.DEFAULT_ALPHA
    gamma: float = constants.DEFAULT_GAMMA
    tau: float = constants.DEFAULT_TAU
    eta_common: float = constants.DEFAULT_ETA_COMMON
    eta_influential: float = constants.DEFAULT_ETA_INFLUENTIAL
    d_eta: float = constants.DEFAULT_D_ETA
    num_agents: int = constants.DEFAULT_NUM_AGENTS
    iterations: int = constants.DEFAULT_ITERATIONS
    seed: int = 0
    exclude_self: bool = True

    def __post_init__(self):
        checks = (
            (self.alpha > 0, f"alpha must be positive, got {self.alpha}"),
            (0.0 <= self.gamma <= 1.0, f"gamma must lie in [0, 1], got {self.gamma}"),
            (self.tau >= 0, f"tau must be non-negative, got {self.tau}"),
            (self.eta_common >= 0, f"eta_common must be non-negative, got {self.eta_common}"),
            (self.eta_influential >= 0, f"eta_influential must be non-negative, got {self.eta_influential}"),
            (0.0 <= self.d_eta <= 1.0, f"d_eta must lie in [0, 1], got {self.d_eta}"),
            (self.num_agents >= 1, f"num_agents must be >= 1, got {self.num_agents}"),
            (self.iterations >= 1, f"iterations must be >= 1, got {self.iterations}"),
            (0 <= self.seed <= MAX_SEED, f"seed must be a 64-bit unsigned integer, got {self.seed}"),
        )
        for passed, message in checks:
            if not passed:
                raise DynamicsParameterError(message)

    @property
    def num_influential(self) -> int:
        return round_half_up(self.d_eta * self.num_agents)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> DynamicsParams:
        known = {item.name for item in fields(cls)}
        return cls(**{key: value for key, value in data.items() if key in known})
