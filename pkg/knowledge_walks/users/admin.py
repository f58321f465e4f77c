from django.contrib import admin
from django.contrib.auth import admin as auth_admin
from django.contrib.auth import get_user_model
from django.utils.translation import gettext_lazy as _

User = get_user_model()


@admin.register(User)
class UserAdmin(auth_admin.UserAdmin):
    """Пользователи с квотой активных серий и счётчиками живых сетей и серий."""

    fieldsets = (
        (None, {"fields": ("email", "password")}),
        (_("Personal info"), {"fields": ("name",)}),
        (_("Experiments"), {"fields": ("max_active_sweeps",)}),
        (_("Permissions"), {"fields": ("is_active", "is_staff", "is_superuser", "groups", "user_permissions")}),
        (_("Important dates"), {"fields": ("last_login", "date_joined")}),
    )
    add_fieldsets = ((None, {"classes": ("wide",), "fields": ("email", "password1", "password2")}),)
    list_display = ["id", "email", "name", "max_active_sweeps", "networks_count", "sweeps_count", "is_active"]
    list_editable = ["max_active_sweeps"]
    search_fields = ["email", "name"]
    ordering = ["id"]

    def get_queryset(self, request):
        queryset = User.objects.with_activity()
        ordering = self.get_ordering(request)
        return queryset.order_by(*ordering) if ordering else queryset

    @admin.display(description=_("Networks"), ordering="networks_count")
    def networks_count(self, obj) -> int:
        return obj.networks_count

    @admin.display(description=_("Sweeps"), ordering="sweeps_count")
    def sweeps_count(self, obj) -> int:
        return obj.sweeps_count
