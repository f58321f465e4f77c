from knowledge_walks.dynamics.agents import AgentPopulation, AgentState


def place(*positions: int, eta: float = 1.0) -> AgentPopulation:
    """Агенты в заданных узлах с одинаковой приспособленностью; старт посещён один раз."""
    return AgentPopulation([AgentState(position=node, eta=eta, visits={node: 1}) for node in positions])


def place_with_etas(placement: list[tuple[int, float]]) -> AgentPopulation:
    return AgentPopulation([AgentState(position=node, eta=eta, visits={node: 1}) for node, eta in placement])
