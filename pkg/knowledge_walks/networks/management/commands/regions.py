from django.conf import settings

from knowledge_walks.networks.cli import add_graph_arguments, load_graph_from_options
from knowledge_walks.networks.enums import RegionMeasure
from knowledge_walks.networks.metrics import build_regions
from knowledge_walks.utils.commands import ExplorationCommand


class Command(ExplorationCommand):
    help = "Делит узлы на регионы по доступности или расстоянию Чебышёва и пишет таблицу регионов"

    def add_arguments(self, parser):
        add_graph_arguments(parser)
        parser.add_argument(
            "--measure",
            choices=[RegionMeasure.ACCESSIBILITY, RegionMeasure.CHEBYSHEV],
            default=RegionMeasure.ACCESSIBILITY,
            help="Measurement used for binning",
        )
        parser.add_argument("--bins", type=int, default=settings.EXPLORATION_REGION_BINS, help="Number of regions")
        parser.add_argument("--h", type=int, default=settings.EXPLORATION_ACCESSIBILITY_H, help="Walk length")
        parser.add_argument("--out", help="Output CSV path (stdout when omitted)")

    def handle(self, *args, **options):
        graph, _ = load_graph_from_options(options)
        frame = build_regions(graph, options["measure"], options["bins"], options["h"]).to_frame()
        if options["out"]:
            frame.to_csv(options["out"], index=False)
            self.stderr.write(f"Wrote {len(frame)} regions to {options['out']}")
        else:
            self.stdout.write(frame.to_csv(index=False), ending="")
