from django.contrib.auth import get_user_model
from rest_framework import serializers

User = get_user_model()


class UserSerializer(serializers.ModelSerializer):
    """Профиль исследователя со счётчиками живых сетей и серий."""

    networks_count = serializers.IntegerField(read_only=True, default=0)
    sweeps_count = serializers.IntegerField(read_only=True, default=0)

    class Meta:
        model = User
        fields = ["name", "url", "max_active_sweeps", "networks_count", "sweeps_count"]
        read_only_fields = ["max_active_sweeps"]

        extra_kwargs = {
            "url": {"view_name": "api:user-detail", "lookup_field": "pk"},
        }


class UserDetailsSerializer(serializers.ModelSerializer):
    class Meta:
        model = User
        fields = ["pk", "email", "name", "max_active_sweeps"]
        read_only_fields = ["pk", "email", "max_active_sweeps"]
