from django.contrib.auth import get_user_model
from drf_spectacular.utils import extend_schema, extend_schema_view
from rest_framework import status
from rest_framework.decorators import action
from rest_framework.mixins import ListModelMixin, RetrieveModelMixin, UpdateModelMixin
from rest_framework.response import Response
from rest_framework.viewsets import GenericViewSet

from .serializers import UserSerializer

User = get_user_model()


@extend_schema_view(
    list=extend_schema(summary="Список пользователей", tags=["Пользователи"]),
    retrieve=extend_schema(summary="Профиль пользователя", tags=["Пользователи"]),
    update=extend_schema(summary="Обновить профиль", tags=["Пользователи"]),
    partial_update=extend_schema(summary="Частично обновить профиль", tags=["Пользователи"]),
)
class UserViewSet(RetrieveModelMixin, ListModelMixin, UpdateModelMixin, GenericViewSet):
    serializer_class = UserSerializer
    queryset = User.objects.all()
    lookup_field = "pk"
    ordering = ["-date_joined"]

    def get_queryset(self, *args, **kwargs):
        assert isinstance(self.request.user.id, int)
        queryset = User.objects.with_activity().order_by(*self.ordering)
        if self.request.user.is_superuser:
            return queryset
        return queryset.filter(id=self.request.user.id)

    @extend_schema(summary="Текущий пользователь", tags=["Пользователи"])
    @action(detail=False)
    def me(self, request):
        user = self.get_queryset().get(pk=request.user.pk)
        serializer = UserSerializer(user, context={"request": request})
        return Response(status=status.HTTP_200_OK, data=serializer.data)
