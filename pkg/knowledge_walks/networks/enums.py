from django.db import models
from django.utils.translation import gettext_lazy as _


class NetworkModel(models.TextChoices):
    LA = "la", _("Lattice")
    TLA = "tla", _("Toroidal lattice")
    WS = "ws", _("Watts-Strogatz")
    BA = "ba", _("Barabasi-Albert")
    WAX = "wax", _("Waxman")
    CN = "cn", _("Community network")
    FILE = "file", _("Edge list file")


class RegionMeasure(models.TextChoices):
    OFF = "off", _("No region analysis")
    CHEBYSHEV = "lattice-chebyshev", _("Chebyshev distance to lattice center")
    ACCESSIBILITY = "accessibility", _("Accessibility")
