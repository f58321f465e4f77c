from django.contrib import admin
from django.utils.translation import gettext_lazy as _

from .models import Network


@admin.register(Network)
class NetworkAdmin(admin.ModelAdmin):
    list_display = ("name", "model", "num_nodes", "num_edges", "mean_degree", "seed", "created_by", "created_at")
    list_filter = ("model", "is_deleted", "created_at")
    search_fields = ("name",)
    readonly_fields = (
        "uuid",
        "num_nodes",
        "num_edges",
        "mean_degree",
        "dropped_edges",
        "created_at",
        "updated_at",
        "created_by",
        "updated_by",
    )
    ordering = ("-created_at",)

    fieldsets = (
        (None, {"fields": ("name", "model", "params", "seed", "edge_list")}),
        (_("Summary"), {"fields": ("num_nodes", "num_edges", "mean_degree", "dropped_edges")}),
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
