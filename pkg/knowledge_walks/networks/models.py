from django.conf import settings
from django.db import models
from django.utils.translation import gettext_lazy as _

from knowledge_walks.utils.constants import MAX_MODEL_KIND_LENGTH, MAX_NETWORK_NAME_LENGTH
from knowledge_walks.utils.models import BaseModel

from .enums import NetworkModel


def edge_list_upload_to(instance: "Network", filename: str) -> str:
    return f"{settings.EXPLORATION_MEDIA_SUBDIR}/networks/{instance.uuid}.edges"


class Network(BaseModel):
    """
    Сохранённая сеть: сгенерированная моделью или загруженная из файла.

    Атрибуты:
        name: Название для отчётов
        model: Модель сети (la, tla, ws, ba, wax, cn или file)
        params: Параметры генератора
        seed: Зерно генератора
        num_nodes / num_edges / mean_degree: Сводка построенного графа
        dropped_edges: Сколько петель и дублей отброшено при построении
        edge_list: Файл со списком рёбер
    """

    name = models.CharField(_("Name"), max_length=MAX_NETWORK_NAME_LENGTH)
    model = models.CharField(_("Model"), max_length=MAX_MODEL_KIND_LENGTH, choices=NetworkModel.choices)
    params = models.JSONField(_("Generator parameters"), default=dict, blank=True)
    seed = models.PositiveBigIntegerField(_("Seed"), default=0)
    num_nodes = models.PositiveIntegerField(_("Nodes"), default=0)
    num_edges = models.PositiveIntegerField(_("Edges"), default=0)
    mean_degree = models.FloatField(_("Mean degree"), default=0.0)
    dropped_edges = models.PositiveIntegerField(_("Dropped edges"), default=0)
    edge_list = models.FileField(_("Edge list"), upload_to=edge_list_upload_to, blank=True)

    class Meta:
        verbose_name = _("Network")
        verbose_name_plural = _("Networks")
        ordering = ["-created_at"]

    def __str__(self):
        return f"{self.name} ({self.model}, N={self.num_nodes})"

    @property
    def is_generated(self) -> bool:
        return self.model != NetworkModel.FILE
