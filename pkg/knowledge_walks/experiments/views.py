import json

from django.db import transaction
from django_filters.rest_framework import DjangoFilterBackend
from drf_spectacular.utils import OpenApiExample, extend_schema, extend_schema_view
from rest_framework import mixins, status, viewsets
from rest_framework.decorators import action
from rest_framework.filters import OrderingFilter
from rest_framework.permissions import IsAuthenticated
from rest_framework.response import Response

from knowledge_walks.utils.permissions import IsActiveUser, IsOwnerOrReadOnly

from .filters import SweepRunFilter
from .models import SweepRun
from .serializers import SweepRunSerializer
from .tasks import run_sweep_task


@extend_schema_view(
    list=extend_schema(
        summary="Список серий",
        description="Постраничный список серий экспериментов с фильтрацией по статусу и сети.",
        tags=["Серии"],
    ),
    retrieve=extend_schema(summary="Получить серию", tags=["Серии"]),
    create=extend_schema(
        summary="Запустить серию",
        description="Проверяет конфигурацию и ставит серию в очередь Celery.",
        tags=["Серии"],
        examples=[
            OpenApiExample(
                "Серия по gamma",
                value={
                    "network_id": 1,
                    "config": {
                        "realizations": 10,
                        "iterations": 200,
                        "grid": {"gamma": [0.0, 0.5, 0.9], "tau": [1.0], "d_eta": [0.1]},
                    },
                },
                request_only=True,
            ),
        ],
    ),
    destroy=extend_schema(
        summary="Удалить серию",
        description="Мягкое удаление. Только автор серии может её удалить.",
        tags=["Серии"],
    ),
)
class SweepRunViewSet(
    mixins.ListModelMixin,
    mixins.RetrieveModelMixin,
    mixins.CreateModelMixin,
    mixins.DestroyModelMixin,
    viewsets.GenericViewSet,
):
    queryset = SweepRun.objects.select_related("network", "created_by").alive()
    serializer_class = SweepRunSerializer
    permission_classes = [IsAuthenticated, IsActiveUser, IsOwnerOrReadOnly]
    filter_backends = [DjangoFilterBackend, OrderingFilter]
    filterset_class = SweepRunFilter
    ordering_fields = ["created_at", "status", "wall_time"]
    ordering = ["-created_at"]

    def perform_create(self, serializer):
        sweep_run = serializer.save(created_by=self.request.user, updated_by=self.request.user)
        transaction.on_commit(lambda: run_sweep_task.delay(sweep_run.pk))

    def perform_destroy(self, instance):
        instance.soft_delete()

    @extend_schema(summary="Результаты серии", tags=["Серии"])
    @action(detail=True, methods=["get"])
    def results(self, request, pk=None):
        """Документ результатов; 409, пока серия не завершена."""
        sweep_run = self.get_object()
        if not sweep_run.is_completed:
            return Response(
                {"detail": f"Sweep run is {sweep_run.status}.", "status": sweep_run.status},
                status=status.HTTP_409_CONFLICT,
            )
        with sweep_run.result.open("rb") as handle:
            return Response(json.loads(handle.read()))
