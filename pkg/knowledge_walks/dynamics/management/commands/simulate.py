from django.conf import settings

from knowledge_walks.dynamics.params import DynamicsParams
from knowledge_walks.dynamics.simulation import simulate
from knowledge_walks.networks.cli import add_graph_arguments, load_graph_from_options
from knowledge_walks.networks.metrics import epsilon_total
from knowledge_walks.utils import constants
from knowledge_walks.utils.commands import ExplorationCommand


class Command(ExplorationCommand):
    help = "Одна реализация динамики: пишет JSON с first_visit, epsilon и числом прыжков"

    def add_arguments(self, parser):
        add_graph_arguments(parser)
        group = parser.add_argument_group("dynamics")
        group.add_argument("--alpha", type=float, default=constants.DEFAULT_ALPHA, help="Memory base alpha")
        group.add_argument("--gamma", type=float, default=constants.DEFAULT_GAMMA, help="Jump probability")
        group.add_argument("--tau", type=float, default=constants.DEFAULT_TAU, help="Field decay")
        group.add_argument("--eta-common", type=float, default=constants.DEFAULT_ETA_COMMON)
        group.add_argument("--eta-influential", type=float, default=constants.DEFAULT_ETA_INFLUENTIAL)
        group.add_argument("--d-eta", type=float, default=constants.DEFAULT_D_ETA, help="Influential fraction")
        group.add_argument("--agents", type=int, default=settings.EXPLORATION_DEFAULT_AGENTS)
        group.add_argument("--iterations", type=int, default=settings.EXPLORATION_DEFAULT_ITERATIONS)
        group.add_argument("--seed", type=int, default=0, help="Dynamics seed")
        group.add_argument(
            "--include-self", action="store_true", help="Let a jumping agent feel its own field"
        )
        parser.add_argument("--out", required=True, help="Output JSON path")

    def handle(self, *args, **options):
        params = DynamicsParams(
            alpha=options["alpha"],
            gamma=options["gamma"],
            tau=options["tau"],
            eta_common=options["eta_common"],
            eta_influential=options["eta_influential"],
            d_eta=options["d_eta"],
            num_agents=options["agents"],
            iterations=options["iterations"],
            seed=options["seed"],
            exclude_self=not options["include_self"],
        )
        graph, source = load_graph_from_options(options)
        record = simulate(graph, params)
        out = self.write_json(
            {"params": params.to_dict(), "network": {**source, **graph.summary()}, "record": record.to_dict()},
            options["out"],
        )
        self.stdout.write(
            self.style.SUCCESS(
                f"{out}: epsilon_T({params.iterations})={epsilon_total(record, params.iterations)} "
                f"discovered={record.num_discovered}/{graph.n}"
            )
        )
