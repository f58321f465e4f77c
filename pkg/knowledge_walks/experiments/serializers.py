from collections.abc import Mapping
from pathlib import Path

from django.conf import settings
from rest_framework import serializers

from knowledge_walks.dynamics.params import MAX_SEED
from knowledge_walks.experiments.config import (
    GRID_AXES,
    NetworkSource,
    OutputConfig,
    RegionConfig,
    SweepConfig,
)
from knowledge_walks.experiments.enums import ResultFormat
from knowledge_walks.experiments.models import SweepRun
from knowledge_walks.networks.enums import NetworkModel, RegionMeasure
from knowledge_walks.networks.generators import PRESETS, GeneratorSpec, generator_parameters, preset
from knowledge_walks.networks.models import Network
from knowledge_walks.networks.serializers import NetworkSerializer
from knowledge_walks.utils import constants


class StrictSerializer(serializers.Serializer):
    """Сериализатор, отклоняющий неизвестные ключи с их перечислением."""

    def to_internal_value(self, data):
        if isinstance(data, Mapping):
            unknown = sorted(set(data) - set(self.fields))
            if unknown:
                raise serializers.ValidationError({key: ["Unknown key."] for key in unknown})
        return super().to_internal_value(data)


def _setting(name: str, fallback):
    return lambda: getattr(settings, name, fallback)


class NetworkConfigSerializer(StrictSerializer):
    model = serializers.ChoiceField(
        choices=[kind for kind in NetworkModel.values if kind != NetworkModel.FILE], required=False
    )
    preset = serializers.ChoiceField(choices=list(PRESETS), required=False)
    params = serializers.DictField(required=False, default=dict)
    seed = serializers.IntegerField(min_value=0, max_value=MAX_SEED, default=0)
    edge_list = serializers.CharField(required=False)
    largest_component = serializers.BooleanField(default=False)
    label = serializers.CharField(required=False, allow_blank=True, default="")

    def validate(self, attrs):
        sources = [key for key in ("model", "preset", "edge_list") if key in attrs]
        if len(sources) != 1:
            raise serializers.ValidationError("Exactly one of model, preset or edge_list is required.")
        if "edge_list" in attrs and attrs["params"]:
            raise serializers.ValidationError({"params": "Edge list networks take no generator parameters."})
        kind = attrs.get("model") or (PRESETS[attrs["preset"]].kind if "preset" in attrs else None)
        if kind is not None:
            unknown = sorted(set(attrs["params"]) - set(generator_parameters(kind)))
            if unknown:
                raise serializers.ValidationError({"params": f"Unknown parameters for {kind}: {', '.join(unknown)}."})
        return attrs

    def build(self, attrs: Mapping, base_dir: Path | None = None) -> NetworkSource:
        spec = None
        edge_list = None
        if "preset" in attrs:
            base = preset(attrs["preset"], seed=attrs["seed"])
            spec = GeneratorSpec(base.kind, {**base.params, **attrs["params"]}, base.seed)
        elif "model" in attrs:
            spec = GeneratorSpec(attrs["model"], attrs["params"], attrs["seed"])
        else:
            edge_list = Path(attrs["edge_list"])
            if not edge_list.is_absolute() and base_dir is not None:
                edge_list = base_dir / edge_list
        label = attrs["label"] or attrs.get("preset") or attrs.get("model") or edge_list.stem
        return NetworkSource(
            spec=spec, edge_list=edge_list, largest_component=attrs["largest_component"], label=label
        )


def _axis(child: serializers.Field, default) -> serializers.ListField:
    return serializers.ListField(child=child, allow_empty=False, default=default)


class GridSerializer(StrictSerializer):
    gamma = _axis(serializers.FloatField(min_value=0.0, max_value=1.0), [constants.DEFAULT_GAMMA])
    tau = _axis(serializers.FloatField(min_value=0.0), [constants.DEFAULT_TAU])
    d_eta = _axis(serializers.FloatField(min_value=0.0, max_value=1.0), [constants.DEFAULT_D_ETA])
    alpha = _axis(serializers.FloatField(), [constants.DEFAULT_ALPHA])
    eta_common = _axis(serializers.FloatField(min_value=0.0), [constants.DEFAULT_ETA_COMMON])
    eta_influential = _axis(serializers.FloatField(min_value=0.0), [constants.DEFAULT_ETA_INFLUENTIAL])
    num_agents = _axis(
        serializers.IntegerField(min_value=1),
        lambda: [getattr(settings, "EXPLORATION_DEFAULT_AGENTS", constants.DEFAULT_NUM_AGENTS)],
    )

    def validate_alpha(self, value):
        if any(alpha <= 0 for alpha in value):
            raise serializers.ValidationError("alpha values must be positive.")
        return value


class RegionsSerializer(StrictSerializer):
    measure = serializers.ChoiceField(choices=RegionMeasure.choices, default=RegionMeasure.OFF)
    h = serializers.IntegerField(
        min_value=1, default=_setting("EXPLORATION_ACCESSIBILITY_H", constants.DEFAULT_ACCESSIBILITY_H)
    )
    bins = serializers.IntegerField(
        min_value=1, default=_setting("EXPLORATION_REGION_BINS", constants.DEFAULT_REGION_BINS)
    )
    t_cut = serializers.IntegerField(min_value=0, required=False)


class OutputSerializer(StrictSerializer):
    directory = serializers.CharField(default=".")
    stem = serializers.CharField(required=False)
    formats = serializers.ListField(
        child=serializers.ChoiceField(choices=ResultFormat.choices),
        allow_empty=False,
        default=[ResultFormat.CSV, ResultFormat.JSON],
    )


class SweepConfigSerializer(StrictSerializer):
    """
    Проверка файла серии. Ошибки адресуются путём ключей, например
    ``grid: gamma: 0: Ensure this value is less than or equal to 1.0.``

    Ключ ``network`` необязателен, если сеть передаётся отдельно
    (контекст ``network_optional``), как при запуске серии через API.
    """

    name = serializers.CharField(required=False, allow_blank=True, default="")
    network = NetworkConfigSerializer(required=False)
    grid = GridSerializer()
    realizations = serializers.IntegerField(
        min_value=1, default=_setting("EXPLORATION_DEFAULT_REALIZATIONS", constants.DEFAULT_REALIZATIONS)
    )
    iterations = serializers.IntegerField(
        min_value=1, default=_setting("EXPLORATION_DEFAULT_ITERATIONS", constants.DEFAULT_ITERATIONS)
    )
    base_seed = serializers.IntegerField(min_value=0, max_value=MAX_SEED, default=0)
    regenerate_network = serializers.BooleanField(default=False)
    regions = RegionsSerializer()
    output = OutputSerializer()

    def to_internal_value(self, data):
        if isinstance(data, Mapping):
            data = {"grid": {}, "regions": {}, "output": {}, **data}
        return super().to_internal_value(data)

    def validate(self, attrs):
        network = attrs.get("network")
        if network is None and not self.context.get("network_optional"):
            raise serializers.ValidationError({"network": "This field is required."})

        regions = attrs["regions"]
        default_t_cut = getattr(settings, "EXPLORATION_DEFAULT_T_CUT", constants.DEFAULT_T_CUT)
        regions.setdefault("t_cut", min(default_t_cut, attrs["iterations"]))
        if regions["t_cut"] > attrs["iterations"]:
            raise serializers.ValidationError({"regions": {"t_cut": "t_cut must not exceed iterations."}})

        if attrs["regenerate_network"]:
            if network is not None and "edge_list" in network:
                raise serializers.ValidationError(
                    {"regenerate_network": "Only generated networks can be regenerated per realization."}
                )
            if regions["measure"] != RegionMeasure.OFF:
                raise serializers.ValidationError(
                    {"regenerate_network": "Region analysis needs one shared network per sweep."}
                )
        return attrs

    def build(self, base_dir: Path | None = None, network: NetworkSource | None = None) -> SweepConfig:
        data = self.validated_data
        if network is None:
            network_attrs = data.get("network")
            network = self.fields["network"].build(network_attrs, base_dir) if network_attrs else NetworkSource()
        grid = {
            axis: tuple(int(value) if axis == "num_agents" else float(value) for value in data["grid"][axis])
            for axis in GRID_AXES
        }
        output = data["output"]
        name = data["name"] or (network.label if network else "") or "sweep"
        return SweepConfig(
            name=name,
            network=network,
            grid=grid,
            realizations=data["realizations"],
            iterations=data["iterations"],
            base_seed=data["base_seed"],
            regenerate_network=data["regenerate_network"],
            regions=RegionConfig(**data["regions"]),
            output=OutputConfig(
                directory=Path(output["directory"]),
                stem=output.get("stem") or name,
                formats=tuple(output["formats"]),
            ),
        )


class SweepRunSerializer(serializers.ModelSerializer):
    network = NetworkSerializer(read_only=True)
    network_id = serializers.PrimaryKeyRelatedField(
        queryset=Network.objects.alive(), source="network", write_only=True
    )

    class Meta:
        model = SweepRun
        fields = [
            "id",
            "uuid",
            "network",
            "network_id",
            "config",
            "status",
            "error",
            "config_hash",
            "wall_time",
            "created_at",
            "updated_at",
        ]
        read_only_fields = ["id", "uuid", "status", "error", "config_hash", "wall_time", "created_at", "updated_at"]

    def validate_config(self, value):
        """Проверяет конфигурацию серии; сеть задаётся полем network_id."""
        if not isinstance(value, dict):
            raise serializers.ValidationError("Config must be an object.")
        if "network" in value:
            raise serializers.ValidationError({"network": "Use network_id to choose the network."})
        serializer = SweepConfigSerializer(data=value, context={"network_optional": True})
        serializer.is_valid(raise_exception=True)
        return value

    def validate(self, attrs):
        if attrs["config"].get("regenerate_network") and not attrs["network"].is_generated:
            raise serializers.ValidationError(
                {"config": {"regenerate_network": "Only generated networks can be regenerated per realization."}}
            )
        request = self.context.get("request")
        if request is not None and not request.user.can_start_sweep():
            raise serializers.ValidationError(
                f"At most {request.user.max_active_sweeps} sweep runs may be pending or running at once."
            )
        return attrs
