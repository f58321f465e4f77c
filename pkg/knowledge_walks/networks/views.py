from django_filters.rest_framework import DjangoFilterBackend
from drf_spectacular.utils import OpenApiExample, OpenApiParameter, extend_schema, extend_schema_view
from rest_framework import mixins, status, viewsets
from rest_framework.decorators import action
from rest_framework.exceptions import ValidationError
from rest_framework.filters import OrderingFilter, SearchFilter
from rest_framework.permissions import IsAuthenticated
from rest_framework.response import Response

from knowledge_walks.utils.exceptions import KnowledgeWalksError
from knowledge_walks.utils.permissions import IsActiveUser, IsOwnerOrReadOnly

from .filters import NetworkFilter
from .generators import GeneratorSpec, preset
from .metrics import accessibility, build_regions
from .models import Network
from .serializers import (
    AccessibilityQuerySerializer,
    NetworkCreateSerializer,
    NetworkSerializer,
    RegionsQuerySerializer,
)
from .services import create_generated_network, create_uploaded_network, load_network_graph


@extend_schema_view(
    list=extend_schema(
        summary="Список сетей",
        description="Постраничный список сохранённых сетей. Фильтрация по модели и числу узлов, поиск по названию.",
        tags=["Сети"],
    ),
    retrieve=extend_schema(summary="Получить сеть", tags=["Сети"]),
    create=extend_schema(
        summary="Построить сеть",
        description="Генерирует сеть по модели или пресету (синхронно) либо сохраняет загруженный список рёбер.",
        tags=["Сети"],
        request=NetworkCreateSerializer,
        responses={201: NetworkSerializer},
        examples=[
            OpenApiExample(
                "Решётка",
                value={"name": "LA 100", "model": "la", "params": {"side": 100}},
                request_only=True,
            ),
            OpenApiExample("Пресет BA", value={"preset": "ba", "seed": 7}, request_only=True),
        ],
    ),
    destroy=extend_schema(
        summary="Удалить сеть",
        description="Мягкое удаление. Только автор сети может её удалить.",
        tags=["Сети"],
    ),
)
class NetworkViewSet(
    mixins.ListModelMixin,
    mixins.RetrieveModelMixin,
    mixins.CreateModelMixin,
    mixins.DestroyModelMixin,
    viewsets.GenericViewSet,
):
    """
    ViewSet сохранённых сетей.

    Дополнительные действия:
    - accessibility: доступность каждого узла
    - regions: разбиение узлов на регионы по доступности или расстоянию Чебышёва
    """

    queryset = Network.objects.select_related("created_by").alive()
    serializer_class = NetworkSerializer
    permission_classes = [IsAuthenticated, IsActiveUser, IsOwnerOrReadOnly]
    filter_backends = [DjangoFilterBackend, SearchFilter, OrderingFilter]
    filterset_class = NetworkFilter
    search_fields = ["name"]
    ordering_fields = ["created_at", "num_nodes", "mean_degree"]
    ordering = ["-created_at"]

    def create(self, request, *args, **kwargs):
        serializer = NetworkCreateSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        data = serializer.validated_data
        try:
            if "edge_list" in data:
                network = create_uploaded_network(
                    data["edge_list"], name=data["name"], largest=data["largest_component"], user=request.user
                )
            else:
                spec = (
                    GeneratorSpec(data["model"], data["params"], data["seed"])
                    if "model" in data
                    else preset(data["preset"], seed=data["seed"])
                )
                if "preset" in data and data["params"]:
                    spec = GeneratorSpec(spec.kind, {**spec.params, **data["params"]}, spec.seed)
                network = create_generated_network(
                    spec, name=data["name"] or data.get("preset", ""), user=request.user
                )
        except KnowledgeWalksError as exc:
            raise ValidationError({"detail": str(exc)}) from exc
        return Response(NetworkSerializer(network).data, status=status.HTTP_201_CREATED)

    def perform_destroy(self, instance):
        instance.soft_delete()

    @extend_schema(
        summary="Доступность узлов",
        tags=["Сети"],
        parameters=[OpenApiParameter(name="h", description="Длина блуждания", required=False, type=int)],
    )
    @action(detail=True, methods=["get"])
    def accessibility(self, request, pk=None):
        network = self.get_object()
        query = AccessibilityQuerySerializer(data=request.query_params)
        query.is_valid(raise_exception=True)
        vector = accessibility(load_network_graph(network), query.validated_data["h"])
        return Response({"h": vector.h, "values": vector.values.tolist()})

    @extend_schema(
        summary="Регионы сети",
        tags=["Сети"],
        parameters=[
            OpenApiParameter(
                name="measure",
                description="Измерение для разбиения",
                required=False,
                type=str,
                enum=["accessibility", "lattice-chebyshev"],
            ),
            OpenApiParameter(name="bins", description="Число регионов", required=False, type=int),
            OpenApiParameter(name="h", description="Длина блуждания для доступности", required=False, type=int),
        ],
    )
    @action(detail=True, methods=["get"])
    def regions(self, request, pk=None):
        network = self.get_object()
        query = RegionsQuerySerializer(data=request.query_params)
        query.is_valid(raise_exception=True)
        params = query.validated_data
        graph = load_network_graph(network)
        try:
            regions = build_regions(graph, params["measure"], min(params["bins"], graph.n), params["h"])
        except KnowledgeWalksError as exc:
            raise ValidationError({"detail": str(exc)}) from exc
        return Response(
            {
                "measure": params["measure"],
                "bins": [
                    {"bin_index": index, "mean_value": float(mean), "size": len(nodes), "nodes": nodes.tolist()}
                    for index, (nodes, mean) in enumerate(zip(regions.bins, regions.bin_stat))
                ],
            }
        )
