"""
Общие аргументы команд управления для выбора сети: файл списка рёбер,
модель с параметрами или именованный пресет.
"""

from argparse import ArgumentParser
from typing import Any

from knowledge_walks.networks.enums import NetworkModel
from knowledge_walks.networks.generators import PRESETS, GeneratorSpec, generate, generator_parameters, preset
from knowledge_walks.networks.graph import Graph, load_edge_list
from knowledge_walks.utils.exceptions import GeneratorSpecError

# флаг командной строки -> параметр генератора
GENERATOR_FLAGS = {
    "side": "side",
    "n": "n",
    "k_ring": "k_ring",
    "p_rewire": "p_rewire",
    "m": "m",
    "wax_alpha": "alpha",
    "beta": "beta",
    "scale": "scale",
    "target_degree": "target_degree",
    "communities": "n_communities",
    "mu": "mu",
    "degree_exponent": "gamma_deg",
    "k_min": "k_min",
    "k_max": "k_max",
    "s_min": "s_min",
    "s_max": "s_max",
}

GENERATED_MODELS = [kind for kind in NetworkModel.values if kind != NetworkModel.FILE]


def add_generator_arguments(parser: ArgumentParser, seed_flag: str = "--seed"):
    group = parser.add_argument_group("network model")
    source = group.add_mutually_exclusive_group()
    source.add_argument("--model", choices=GENERATED_MODELS, help="Network model")
    source.add_argument("--preset", choices=list(PRESETS), help="Named network configuration")
    group.add_argument(seed_flag, dest="network_seed", type=int, default=0, help="Generator seed")
    group.add_argument("--side", type=int, help="Lattice side L (la, tla)")
    group.add_argument("--n", type=int, help="Number of nodes (ws, ba, wax, cn)")
    group.add_argument("--k-ring", type=int, help="Ring neighbours, even (ws)")
    group.add_argument("--p-rewire", type=float, help="Rewiring probability (ws)")
    group.add_argument("--m", type=int, help="Links per new node (ba)")
    group.add_argument("--wax-alpha", type=float, help="Distance scale alpha (wax)")
    group.add_argument("--beta", type=float, help="Link density beta (wax)")
    group.add_argument("--scale", type=float, help="Length scale L (wax)")
    group.add_argument("--target-degree", type=float, help="Calibrate to this mean degree (wax, cn)")
    group.add_argument("--communities", type=int, help="Number of communities (cn)")
    group.add_argument("--mu", type=float, help="Mixing parameter (cn)")
    group.add_argument("--degree-exponent", type=float, help="Degree power-law exponent (cn)")
    group.add_argument("--k-min", type=int, help="Minimum degree (cn)")
    group.add_argument("--k-max", type=int, help="Maximum degree (cn)")
    group.add_argument("--s-min", type=int, help="Minimum community size (cn)")
    group.add_argument("--s-max", type=int, help="Maximum community size (cn)")


def add_graph_arguments(parser: ArgumentParser, seed_flag: str = "--network-seed"):
    parser.add_argument("--graph", help="Edge list file")
    parser.add_argument(
        "--largest-component", action="store_true", help="Keep only the largest connected component of --graph"
    )
    add_generator_arguments(parser, seed_flag=seed_flag)


def generator_spec_from_options(options: dict[str, Any]) -> GeneratorSpec | None:
    """
    Спецификация из флагов. Флаг, не относящийся к выбранной модели, считается ошибкой.

    Raises:
        GeneratorSpecError: флаг не подходит модели
    """
    given = {GENERATOR_FLAGS[flag]: options[flag] for flag in GENERATOR_FLAGS if options.get(flag) is not None}
    if options.get("preset"):
        spec = preset(options["preset"], seed=options["network_seed"])
        kind, params = spec.kind, {**spec.params}
    elif options.get("model"):
        kind, params = options["model"], {}
    else:
        if given:
            raise GeneratorSpecError("generator flags require --model or --preset")
        return None

    allowed = set(generator_parameters(kind))
    foreign = sorted(name for name in given if name not in allowed)
    if foreign:
        flags = [f"--{flag.replace('_', '-')}" for flag, name in GENERATOR_FLAGS.items() if name in foreign]
        raise GeneratorSpecError(f"{', '.join(flags)} not applicable to model {kind}")
    params.update(given)
    return GeneratorSpec(kind, params, options["network_seed"])


def load_graph_from_options(options: dict[str, Any]) -> tuple[Graph, dict[str, Any]]:
    """Граф из ``--graph`` или из флагов генератора и описание источника."""
    spec = generator_spec_from_options(options)
    if options.get("graph"):
        if spec is not None:
            raise GeneratorSpecError("use either --graph or a generator, not both")
        graph = load_edge_list(options["graph"], largest=options["largest_component"])
        return graph, {"edge_list": options["graph"], "largest_component": options["largest_component"]}
    if spec is None:
        raise GeneratorSpecError("a network is required: pass --graph, --model or --preset")
    return generate(spec), {"spec": spec.to_dict()}
