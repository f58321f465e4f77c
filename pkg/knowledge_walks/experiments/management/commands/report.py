from pathlib import Path

from django.core.management.base import CommandError

from knowledge_walks.experiments.export import load_results, report_frames
from knowledge_walks.utils.commands import EXIT_USAGE, ExplorationCommand
from knowledge_walks.utils.exceptions import ResultFileError


class Command(ExplorationCommand):
    help = "Сводит JSON-результаты серий в таблицы для графиков: global_curves, final_performance, region_curves"

    def add_arguments(self, parser):
        parser.add_argument("results", nargs="+", help="Sweep result JSON files")
        parser.add_argument(
            "--label",
            action="append",
            default=[],
            help="Network label for each result file, in order (default: name stored in the result)",
        )
        parser.add_argument("--out-dir", default=".", help="Directory for the report CSV files")

    def handle(self, *args, **options):
        paths = options["results"]
        labels = options["label"]
        if labels and len(labels) != len(paths):
            raise CommandError("--label must be given once per result file", returncode=EXIT_USAGE)

        results = []
        for index, path in enumerate(paths):
            payload = load_results(path)
            metadata = payload.get("metadata", {})
            label = labels[index] if labels else metadata.get("network", {}).get("label") or metadata.get("name", "")
            results.append((label, payload))

        out_dir = Path(options["out_dir"])
        out_dir.mkdir(parents=True, exist_ok=True)
        try:
            frames = report_frames(results)
        except (KeyError, IndexError, TypeError) as exc:
            raise ResultFileError(f"result file has an unexpected layout: {exc!r}") from exc
        for name, frame in frames.items():
            target = out_dir / f"{name}.csv"
            frame.to_csv(target, index=False)
            self.stdout.write(str(target))
