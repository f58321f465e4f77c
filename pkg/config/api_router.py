from django.conf import settings
from rest_framework.routers import DefaultRouter, SimpleRouter

from knowledge_walks.experiments.views import SweepRunViewSet
from knowledge_walks.networks.views import NetworkViewSet
from knowledge_walks.users.api.views import UserViewSet

if settings.DEBUG:
    router = DefaultRouter()
else:
    router = SimpleRouter()

router.register("users", UserViewSet)
router.register("networks", NetworkViewSet, basename="network")
router.register("sweeps", SweepRunViewSet, basename="sweep")


app_name = "api"
urlpatterns = router.urls
