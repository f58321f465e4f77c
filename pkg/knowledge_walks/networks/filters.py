from django_filters import rest_framework as filters

from .models import Network


class NetworkFilter(filters.FilterSet):
    min_nodes = filters.NumberFilter(field_name="num_nodes", lookup_expr="gte")
    max_nodes = filters.NumberFilter(field_name="num_nodes", lookup_expr="lte")

    class Meta:
        model = Network
        fields = ["model"]
