from django_filters import rest_framework as filters

from .models import SweepRun


class SweepRunFilter(filters.FilterSet):
    class Meta:
        model = SweepRun
        fields = ["status", "network"]
