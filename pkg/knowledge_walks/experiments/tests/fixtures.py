from pathlib import Path
from typing import Any

from knowledge_walks.experiments.config import SweepConfig, parse_sweep_config


def sweep_config(**overrides: Any) -> SweepConfig:
    """Небольшая серия на решётке 5x5 для быстрых тестов."""
    data: dict[str, Any] = {
        "name": "small",
        "network": {"model": "la", "params": {"side": 5}},
        "realizations": 2,
        "iterations": 12,
        "grid": {"gamma": [0.0, 0.5], "tau": [1.0], "d_eta": [0.1], "num_agents": [4]},
    }
    data.update(overrides)
    return parse_sweep_config(data)


def write_toml(path: Path, text: str) -> str:
    path.write_text(text)
    return str(path)


MINIMAL_TOML = """
name = "minimal"
realizations = 2
iterations = 8

[network]
model = "la"
params = { side = 4 }

[grid]
gamma = [0.0, 0.5]
tau = [1.0]
d_eta = [0.1]
num_agents = [3]
"""
