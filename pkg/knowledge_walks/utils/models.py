import uuid

from django.db import models


class SoftDeleteQuerySet(models.QuerySet):
    def alive(self):
        return self.filter(is_deleted=False)

    def owned_by(self, user):
        return self.filter(created_by=user)


class BaseModel(models.Model):
    """
    Общие поля для сохраняемых сущностей: сети, прогоны экспериментов.

    Атрибуты:
        uuid: Внешний идентификатор (используется в именах файлов результатов)
        created_by / updated_by: Автор и последний редактор
        is_deleted: Флаг мягкого удаления, файлы на диске при этом не трогаются
    """

    uuid = models.UUIDField(default=uuid.uuid4, editable=False, unique=True)
    created_by = models.ForeignKey(
        "users.User",
        on_delete=models.SET_NULL,
        null=True,
        blank=True,
        related_name="%(class)s_created",
    )
    updated_by = models.ForeignKey(
        "users.User",
        on_delete=models.SET_NULL,
        null=True,
        blank=True,
        related_name="%(class)s_updated",
    )
    created_at = models.DateTimeField(auto_now_add=True, editable=False, null=True)
    updated_at = models.DateTimeField(auto_now=True, null=True)
    is_deleted = models.BooleanField(default=False)

    objects = SoftDeleteQuerySet.as_manager()

    class Meta:
        abstract = True

    def soft_delete(self):
        self.is_deleted = True
        self.save(update_fields=["is_deleted", "updated_at"])
