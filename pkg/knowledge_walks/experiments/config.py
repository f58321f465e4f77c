"""
Конфигурация серии экспериментов.

Файл серии записан в TOML; его содержимое проверяется сериализаторами из
``knowledge_walks.experiments.serializers`` и превращается в ``SweepConfig``.
"""

from __future__ import annotations

import hashlib
import itertools
import json
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from collections.abc import Mapping
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any

from rest_framework.exceptions import ValidationError

from knowledge_walks.dynamics.params import DynamicsParams
from knowledge_walks.experiments.enums import ResultFormat
from knowledge_walks.networks.enums import RegionMeasure
from knowledge_walks.networks.generators import GeneratorSpec
from knowledge_walks.utils.constants import SIDECAR_SUFFIX

GRID_AXES = ("alpha", "d_eta", "eta_common", "eta_influential", "gamma", "num_agents", "tau")
REQUIRED_AXES = ("gamma", "tau", "d_eta")
OPTIONAL_AXES = tuple(axis for axis in GRID_AXES if axis not in REQUIRED_AXES)


@dataclass(frozen=True, order=True)
class GridPoint:
    """Точка сетки параметров; поля перечислены в каноническом (алфавитном) порядке."""

    alpha: float
    d_eta: float
    eta_common: float
    eta_influential: float
    gamma: float
    num_agents: int
    tau: float

    @property
    def key(self) -> str:
        return ";".join(f"{item.name}={getattr(self, item.name)!r}" for item in fields(self))

    def as_dict(self) -> dict[str, Any]:
        return {item.name: getattr(self, item.name) for item in fields(self)}

    def dynamics_params(self, iterations: int, seed: int) -> DynamicsParams:
        return DynamicsParams(**self.as_dict(), iterations=iterations, seed=seed)


@dataclass(frozen=True)
class NetworkSource:
    spec: GeneratorSpec | None = None
    edge_list: Path | None = None
    largest_component: bool = False
    label: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "spec": self.spec.to_dict() if self.spec else None,
            "edge_list": str(self.edge_list) if self.edge_list else None,
            "largest_component": self.largest_component,
            "label": self.label,
        }


@dataclass(frozen=True)
class RegionConfig:
    measure: str = RegionMeasure.OFF
    h: int = 3
    bins: int = 10
    t_cut: int = 1000

    @property
    def enabled(self) -> bool:
        return self.measure != RegionMeasure.OFF


@dataclass(frozen=True)
class OutputConfig:
    directory: Path = Path(".")
    stem: str = "sweep"
    formats: tuple[str, ...] = (ResultFormat.CSV, ResultFormat.JSON)

    def path(self, result_format: str) -> Path:
        return self.directory / f"{self.stem}.{result_format}"

    def sidecar_path(self) -> Path:
        return self.directory / f"{self.stem}{SIDECAR_SUFFIX}"


@dataclass(frozen=True)
class SweepConfig:
    """
    Серия экспериментов: сеть, сетка параметров и протокол реализаций.

    ``grid`` хранит значения всех семи осей; непереданные оси имеют одно
    значение по умолчанию.
    """

    network: NetworkSource
    grid: Mapping[str, tuple]
    realizations: int
    iterations: int
    base_seed: int = 0
    regenerate_network: bool = False
    regions: RegionConfig = field(default_factory=RegionConfig)
    output: OutputConfig = field(default_factory=OutputConfig)
    name: str = ""

    def grid_points(self) -> list[GridPoint]:
        """Все сочетания значений осей, упорядоченные по каноническому ключу."""
        axes = [self.grid[axis] for axis in GRID_AXES]
        points = {GridPoint(*values) for values in itertools.product(*axes)}
        return sorted(points, key=lambda point: point.key)

    @property
    def varying_optional_axes(self) -> list[str]:
        return [axis for axis in OPTIONAL_AXES if len(self.grid[axis]) > 1]

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "network": self.network.to_dict(),
            "grid": {axis: list(values) for axis, values in self.grid.items()},
            "realizations": self.realizations,
            "iterations": self.iterations,
            "base_seed": self.base_seed,
            "regenerate_network": self.regenerate_network,
            "regions": {
                "measure": str(self.regions.measure),
                "h": self.regions.h,
                "bins": self.regions.bins,
                "t_cut": self.regions.t_cut,
            },
        }

    @property
    def config_hash(self) -> str:
        canonical = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode()).hexdigest()


def parse_sweep_config(data: Mapping[str, Any], base_dir: Path | None = None) -> SweepConfig:
    """
    Проверяет словарь конфигурации и строит ``SweepConfig``.

    Raises:
        rest_framework.exceptions.ValidationError: с именем ошибочного ключа
    """
    from knowledge_walks.experiments.serializers import SweepConfigSerializer

    serializer = SweepConfigSerializer(data=dict(data))
    serializer.is_valid(raise_exception=True)
    return serializer.build(base_dir=base_dir)


def load_sweep_config(path: str | Path) -> SweepConfig:
    path = Path(path)
    with open(path, "rb") as handle:
        try:
            data = tomllib.load(handle)
        except tomllib.TOMLDecodeError as exc:
            raise ValidationError({"config": f"{path}: {exc}"}) from exc
    return parse_sweep_config(data, base_dir=path.parent)
