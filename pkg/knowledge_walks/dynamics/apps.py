from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class DynamicsConfig(AppConfig):
    name = "knowledge_walks.dynamics"
    verbose_name = _("Dynamics")
