from typing import ClassVar

from django.contrib.auth.models import AbstractUser
from django.db.models import CharField, EmailField, PositiveSmallIntegerField
from django.utils.translation import gettext_lazy as _

from knowledge_walks.users.managers import UserManager
from knowledge_walks.utils.constants import DEFAULT_MAX_ACTIVE_SWEEPS


class User(AbstractUser):
    """
    Исследователь: владелец сетей и серий экспериментов.
    Использует email в качестве идентификатора вместо username.

    Атрибуты:
        max_active_sweeps: Сколько серий пользователя могут одновременно ждать или выполняться
    """

    name = CharField(_("Name of User"), blank=True, max_length=255)
    first_name = None  # type: ignore
    last_name = None  # type: ignore
    email = EmailField(_("email address"), unique=True)
    username = None  # type: ignore
    max_active_sweeps = PositiveSmallIntegerField(_("Max active sweeps"), default=DEFAULT_MAX_ACTIVE_SWEEPS)

    USERNAME_FIELD = "email"
    REQUIRED_FIELDS = []

    objects: ClassVar[UserManager] = UserManager()

    def __str__(self) -> str:
        if self.name:
            return f"#{self.id} - {self.name} ({self.email})"
        return f"#{self.id} - {self.email}"

    def active_sweeps(self):
        """Живые серии пользователя в статусе pending или running."""
        from knowledge_walks.experiments.enums import SweepStatus
        from knowledge_walks.experiments.models import SweepRun

        return SweepRun.objects.alive().owned_by(self).filter(
            status__in=[SweepStatus.PENDING, SweepStatus.RUNNING]
        )

    def can_start_sweep(self) -> bool:
        return self.active_sweeps().count() < self.max_active_sweeps
