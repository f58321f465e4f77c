from django.contrib import admin
from django.utils.translation import gettext_lazy as _

from .models import SweepRun


@admin.register(SweepRun)
class SweepRunAdmin(admin.ModelAdmin):
    list_display = ("uuid", "network", "status", "wall_time", "created_by", "created_at")
    list_filter = ("status", "is_deleted", "created_at")
    search_fields = ("network__name", "config_hash")
    readonly_fields = (
        "uuid",
        "config_hash",
        "wall_time",
        "result",
        "created_at",
        "updated_at",
        "created_by",
        "updated_by",
    )
    list_select_related = ("network", "created_by")
    ordering = ("-created_at",)

    fieldsets = (
        (None, {"fields": ("network", "config", "status", "error")}),
        (_("Result"), {"fields": ("config_hash", "wall_time", "result")}),
        (
            _("Metadata"),
            {
                "fields": (
                    "uuid",
                    "created_at",
                    "updated_at",
                    "created_by",
                    "updated_by",
                    "is_deleted",
                ),
                "classes": ("collapse",),
            },
        ),
    )
