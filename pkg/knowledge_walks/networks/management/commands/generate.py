from datetime import datetime, timezone
from pathlib import Path

from knowledge_walks.networks.cli import add_generator_arguments, generator_spec_from_options
from knowledge_walks.networks.generators import generate
from knowledge_walks.networks.graph import save_edge_list
from knowledge_walks.utils.commands import ExplorationCommand
from knowledge_walks.utils.constants import SIDECAR_SUFFIX
from knowledge_walks.utils.exceptions import GeneratorSpecError

UTC = timezone.utc  # datetime.UTC needs Python 3.11


def sidecar_path(path: Path) -> Path:
    return path.with_suffix(SIDECAR_SUFFIX)


class Command(ExplorationCommand):
    help = "Генерирует сеть и пишет список рёбер с файлом метаданных рядом"

    def add_arguments(self, parser):
        add_generator_arguments(parser)
        parser.add_argument("--out", required=True, help="Output edge list path")

    def handle(self, *args, **options):
        spec = generator_spec_from_options(options)
        if spec is None:
            raise GeneratorSpecError("--model or --preset is required")
        graph = generate(spec)
        out = save_edge_list(graph, options["out"])
        summary = graph.summary()
        self.write_json(
            {
                "spec": spec.to_dict(),
                "seed": spec.seed,
                **summary,
                "generated_at": datetime.now(UTC).isoformat(),
            },
            sidecar_path(out),
        )
        self.stdout.write(
            self.style.SUCCESS(
                f"{out}: N={graph.n} E={graph.num_edges} k={graph.mean_degree:.2f}"
            )
        )
