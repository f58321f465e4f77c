"""
Базовая команда управления с единым соглашением о кодах возврата.

Коды: 0 успех, 1 ошибка использования (аргументы, валидация),
2 ввод/вывод, 3 численная ошибка или нереализуемая спецификация.
"""

import json
import os
import sys
from functools import partial
from pathlib import Path
from typing import Any

from django.core.exceptions import ValidationError as DjangoValidationError
from django.core.management.base import BaseCommand, CommandError, CommandParser
from rest_framework.exceptions import ValidationError

from knowledge_walks.utils.exceptions import (
    DynamicsParameterError,
    GeneratorSpecError,
    GraphFormatError,
    KnowledgeWalksError,
    NodeIndexError,
    ResultFileError,
)

EXIT_USAGE = 1
EXIT_IO = 2
EXIT_NUMERICAL = 3


def _usage_error(parser: CommandParser, message: str):
    if parser.called_from_command_line:
        parser.print_usage(sys.stderr)
        parser.exit(EXIT_USAGE, f"{parser.prog}: error: {message}\n")
    raise CommandError(f"Error: {message}", returncode=EXIT_USAGE)


def format_validation_error(detail: Any) -> str:
    """Сплющивает ошибки сериализатора DRF в строку вида ``key: message``."""
    if isinstance(detail, dict):
        parts = []
        for key, value in detail.items():
            parts.append(f"{key}: {format_validation_error(value)}")
        return "; ".join(parts)
    if isinstance(detail, list):
        return ", ".join(format_validation_error(item) for item in detail)
    return str(detail)


def default_workers() -> int:
    return os.cpu_count() or 1


class ExplorationCommand(BaseCommand):
    """
    Общий предок команд generate/simulate/sweep/accessibility/regions/report.

    Переводит исключения предметной области в CommandError с нужным кодом
    возврата и делает ошибки argparse ошибками использования (код 1).
    """

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.error = partial(_usage_error, parser)
        return parser

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except CommandError:
            raise
        except ValidationError as exc:
            raise CommandError(format_validation_error(exc.detail), returncode=EXIT_USAGE) from exc
        except DjangoValidationError as exc:
            raise CommandError("; ".join(exc.messages), returncode=EXIT_USAGE) from exc
        except (GeneratorSpecError, DynamicsParameterError) as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE) from exc
        except (GraphFormatError, NodeIndexError, ResultFileError, OSError) as exc:
            raise CommandError(str(exc), returncode=EXIT_IO) from exc
        except KnowledgeWalksError as exc:
            raise CommandError(str(exc), returncode=EXIT_NUMERICAL) from exc

    def write_json(self, payload: dict, path: str | Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        return path
