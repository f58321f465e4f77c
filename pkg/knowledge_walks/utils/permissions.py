from rest_framework import permissions


class IsActiveUser(permissions.BasePermission):
    """
    Доступ только для аутентифицированных активных пользователей.
    """

    def has_permission(self, request, view):
        return bool(request.user and request.user.is_authenticated and request.user.is_active)


class IsOwnerOrReadOnly(permissions.BasePermission):
    """
    Сети и прогоны читают все, изменяет или удаляет только автор (или администратор).
    """

    def has_object_permission(self, request, view, obj):
        if request.method in permissions.SAFE_METHODS:
            return True
        return request.user.is_staff or obj.created_by_id == request.user.id
