from django.db import models
from django.utils.translation import gettext_lazy as _


class SweepStatus(models.TextChoices):
    PENDING = "pending", _("Pending")
    RUNNING = "running", _("Running")
    COMPLETED = "completed", _("Completed")
    FAILED = "failed", _("Failed")


class ResultFormat(models.TextChoices):
    CSV = "csv", _("CSV")
    JSON = "json", _("JSON")
