import networkx as nx

from knowledge_walks.networks.graph import Graph, build_graph


def path_graph(n: int = 3) -> Graph:
    """Путь 0-1-...-(n-1)."""
    return build_graph(n, [(node, node + 1) for node in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """Звезда с центром 0 и листьями 1..leaves."""
    return build_graph(leaves + 1, [(0, leaf) for leaf in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_networkx(nx.complete_graph(n))


def write_edge_list(path, text: str) -> str:
    path.write_text(text)
    return str(path)
