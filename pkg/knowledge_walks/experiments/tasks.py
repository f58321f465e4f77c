import json
import logging

from celery import shared_task
from django.conf import settings
from django.core.files.base import ContentFile

from knowledge_walks.networks.services import load_network_graph, network_spec

from .config import NetworkSource
from .enums import SweepStatus
from .export import result_payload
from .models import SweepRun
from .serializers import SweepConfigSerializer
from .sweep import run_sweep

logger = logging.getLogger(__name__)


@shared_task
def run_sweep_task(sweep_run_id: int):
    """
    Выполняет сохранённую серию над её сетью.

    Результат сохраняется только при успешном завершении; при ошибке серия
    помечается как failed с текстом ошибки.
    """
    sweep_run = SweepRun.objects.select_related("network").get(pk=sweep_run_id)
    sweep_run.status = SweepStatus.RUNNING
    sweep_run.save(update_fields=["status", "updated_at"])

    network = sweep_run.network
    try:
        serializer = SweepConfigSerializer(data=sweep_run.config, context={"network_optional": True})
        serializer.is_valid(raise_exception=True)
        config = serializer.build(network=NetworkSource(spec=network_spec(network), label=network.name))
        result = run_sweep(config, graph=load_network_graph(network), workers=settings.EXPLORATION_TASK_WORKERS)
    except Exception as exc:
        logger.exception("Sweep run %s failed", sweep_run.uuid)
        sweep_run.status = SweepStatus.FAILED
        sweep_run.error = str(exc)
        sweep_run.save(update_fields=["status", "error", "updated_at"])
        return sweep_run.status

    payload = json.dumps(result_payload(result), indent=2, sort_keys=True)
    sweep_run.result.save(f"{sweep_run.uuid}.json", ContentFile(payload), save=False)
    sweep_run.config_hash = result.metadata["config_hash"]
    sweep_run.wall_time = result.wall_time
    sweep_run.status = SweepStatus.COMPLETED
    sweep_run.error = ""
    sweep_run.save()
    logger.info("Sweep run %s completed in %.1f s", sweep_run.uuid, sweep_run.wall_time)
    return sweep_run.status
