from django.conf import settings

from knowledge_walks.networks.cli import add_graph_arguments, load_graph_from_options
from knowledge_walks.networks.metrics import accessibility
from knowledge_walks.utils.commands import ExplorationCommand


class Command(ExplorationCommand):
    help = "Считает доступность каждого узла и пишет CSV (node_id,value)"

    def add_arguments(self, parser):
        add_graph_arguments(parser)
        parser.add_argument("--h", type=int, default=settings.EXPLORATION_ACCESSIBILITY_H, help="Walk length")
        parser.add_argument("--out", help="Output CSV path (stdout when omitted)")

    def handle(self, *args, **options):
        graph, _ = load_graph_from_options(options)
        frame = accessibility(graph, options["h"]).to_frame()
        if options["out"]:
            frame.to_csv(options["out"], index=False)
            self.stderr.write(f"Wrote {len(frame)} nodes to {options['out']}")
        else:
            self.stdout.write(frame.to_csv(index=False), ending="")
