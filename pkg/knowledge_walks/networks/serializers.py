from django.contrib.auth import get_user_model
from rest_framework import serializers

from knowledge_walks.dynamics.params import MAX_SEED
from knowledge_walks.utils.constants import MAX_NETWORK_NAME_LENGTH

from .enums import NetworkModel, RegionMeasure
from .generators import PRESETS, generator_parameters
from .models import Network

User = get_user_model()


class UserMinimalSerializer(serializers.ModelSerializer):
    class Meta:
        model = User
        fields = ["id", "email", "name"]
        read_only_fields = ["id", "email", "name"]


class NetworkSerializer(serializers.ModelSerializer):
    created_by = UserMinimalSerializer(read_only=True)

    class Meta:
        model = Network
        fields = [
            "id",
            "uuid",
            "name",
            "model",
            "params",
            "seed",
            "num_nodes",
            "num_edges",
            "mean_degree",
            "dropped_edges",
            "created_by",
            "created_at",
            "updated_at",
        ]
        read_only_fields = fields


class NetworkCreateSerializer(serializers.Serializer):
    """
    Создание сети: либо модель с параметрами, либо пресет, либо файл списка рёбер.
    """

    name = serializers.CharField(max_length=MAX_NETWORK_NAME_LENGTH, required=False, allow_blank=True, default="")
    model = serializers.ChoiceField(choices=NetworkModel.choices, required=False)
    preset = serializers.ChoiceField(choices=list(PRESETS), required=False)
    params = serializers.DictField(required=False, default=dict)
    seed = serializers.IntegerField(min_value=0, max_value=MAX_SEED, default=0)
    edge_list = serializers.FileField(required=False)
    largest_component = serializers.BooleanField(default=False)

    def validate(self, attrs):
        if "preset" in attrs and "model" in attrs:
            raise serializers.ValidationError("Use either model or preset, not both.")
        if attrs.get("model") == NetworkModel.FILE or "edge_list" in attrs:
            if "edge_list" not in attrs:
                raise serializers.ValidationError({"edge_list": "An edge list file is required for model 'file'."})
            if "preset" in attrs or attrs.get("model", NetworkModel.FILE) != NetworkModel.FILE:
                raise serializers.ValidationError(
                    {"edge_list": "Edge list uploads cannot be combined with a generator."}
                )
            return attrs
        if "model" not in attrs and "preset" not in attrs:
            raise serializers.ValidationError("One of model, preset or edge_list is required.")
        kind = attrs["model"] if "model" in attrs else PRESETS[attrs["preset"]].kind
        unknown = sorted(set(attrs["params"]) - set(generator_parameters(kind)))
        if unknown:
            raise serializers.ValidationError({"params": f"Unknown parameters for {kind}: {', '.join(unknown)}."})
        return attrs


class AccessibilityQuerySerializer(serializers.Serializer):
    h = serializers.IntegerField(min_value=1, default=3)


class RegionsQuerySerializer(serializers.Serializer):
    measure = serializers.ChoiceField(
        choices=[RegionMeasure.ACCESSIBILITY, RegionMeasure.CHEBYSHEV], default=RegionMeasure.ACCESSIBILITY
    )
    bins = serializers.IntegerField(min_value=1, default=10)
    h = serializers.IntegerField(min_value=1, default=3)
