from django.conf import settings
from django.db import models
from django.utils.translation import gettext_lazy as _

from knowledge_walks.networks.models import Network
from knowledge_walks.utils.constants import CONFIG_HASH_LENGTH, MAX_SWEEP_STATUS_LENGTH
from knowledge_walks.utils.models import BaseModel

from .enums import SweepStatus


def result_upload_to(instance: "SweepRun", filename: str) -> str:
    return f"{settings.EXPLORATION_MEDIA_SUBDIR}/sweeps/{instance.uuid}.json"


class SweepRun(BaseModel):
    """
    Серия экспериментов над сохранённой сетью, выполняемая в фоне.

    Атрибуты:
        network: Сеть, на которой идут реализации
        config: Проверенная конфигурация серии (без ключа network)
        status: pending, running, completed или failed
        error: Сообщение об ошибке для failed
        config_hash: SHA-256 канонической конфигурации
        wall_time: Время выполнения в секундах
        result: JSON с результатами, появляется только после успешного завершения
    """

    network = models.ForeignKey(Network, on_delete=models.PROTECT, related_name="sweeps")
    config = models.JSONField(_("Config"), default=dict)
    status = models.CharField(
        _("Status"),
        max_length=MAX_SWEEP_STATUS_LENGTH,
        choices=SweepStatus.choices,
        default=SweepStatus.PENDING,
    )
    error = models.TextField(_("Error"), blank=True)
    config_hash = models.CharField(_("Config hash"), max_length=CONFIG_HASH_LENGTH, blank=True)
    wall_time = models.FloatField(_("Wall time, s"), null=True, blank=True)
    result = models.FileField(_("Result"), upload_to=result_upload_to, blank=True)

    class Meta:
        verbose_name = _("Sweep run")
        verbose_name_plural = _("Sweep runs")
        ordering = ["-created_at"]

    def __str__(self):
        return f"Sweep {self.uuid} on {self.network.name} [{self.status}]"

    @property
    def is_completed(self) -> bool:
        return self.status == SweepStatus.COMPLETED
