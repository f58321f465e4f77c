from dataclasses import replace
from datetime import datetime, timezone
from pathlib import Path

from django.conf import settings
from django.core.management.base import CommandError

from knowledge_walks.experiments.config import load_sweep_config
from knowledge_walks.experiments.enums import ResultFormat
from knowledge_walks.experiments.export import export_results
from knowledge_walks.experiments.sweep import run_sweep
from knowledge_walks.utils.commands import EXIT_USAGE, ExplorationCommand, default_workers

UTC = timezone.utc  # datetime.UTC needs Python 3.11


class Command(ExplorationCommand):
    help = "Запускает серию экспериментов по файлу конфигурации TOML и пишет CSV/JSON"

    def add_arguments(self, parser):
        parser.add_argument("config", help="Sweep config (TOML)")
        parser.add_argument(
            "--threads",
            type=int,
            default=None,
            help="Worker processes (default: EXPLORATION_SWEEP_WORKERS or available CPUs)",
        )
        parser.add_argument("--out-dir", help="Override [output] directory")
        parser.add_argument(
            "--format",
            dest="formats",
            action="append",
            choices=ResultFormat.values,
            help="Override [output] formats; repeat for several",
        )

    def handle(self, *args, **options):
        if options["threads"] is not None and options["threads"] < 1:
            raise CommandError("--threads must be >= 1", returncode=EXIT_USAGE)
        config = load_sweep_config(options["config"])
        if options["out_dir"] or options["formats"]:
            config = replace(
                config,
                output=replace(
                    config.output,
                    directory=Path(options["out_dir"]) if options["out_dir"] else config.output.directory,
                    formats=tuple(options["formats"] or config.output.formats),
                ),
            )
        workers = options["threads"] or settings.EXPLORATION_SWEEP_WORKERS or default_workers()

        result = run_sweep(config, workers=workers)
        for result_format in config.output.formats:
            for path in export_results(result, result_format, config.output.path(result_format)):
                self.stdout.write(str(path))
        # Файлы результатов не содержат времени запуска; оно пишется только сюда.
        self.write_json(
            {
                "config_hash": result.metadata["config_hash"],
                "workers": workers,
                "wall_time": result.wall_time,
                "finished_at": datetime.now(UTC).isoformat(),
            },
            config.output.sidecar_path(),
        )
