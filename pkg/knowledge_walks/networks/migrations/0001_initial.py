# Generated by Django 5.2.7 on 2026-09-28 10:14

import django.db.models.deletion
import knowledge_walks.networks.models
import uuid
from django.conf import settings
from django.db import migrations, models


class Migration(migrations.Migration):
    initial = True

    dependencies = [
        migrations.swappable_dependency(settings.AUTH_USER_MODEL),
    ]

    operations = [
        migrations.CreateModel(
            name="Network",
            fields=[
                (
                    "id",
                    models.BigAutoField(
                        auto_created=True,
                        primary_key=True,
                        serialize=False,
                        verbose_name="ID",
                    ),
                ),
                (
                    "uuid",
                    models.UUIDField(default=uuid.uuid4, editable=False, unique=True),
                ),
                ("created_at", models.DateTimeField(auto_now_add=True, null=True)),
                ("updated_at", models.DateTimeField(auto_now=True, null=True)),
                ("is_deleted", models.BooleanField(default=False)),
                ("name", models.CharField(max_length=100, verbose_name="Name")),
                (
                    "model",
                    models.CharField(
                        choices=[
                            ("la", "Lattice"),
                            ("tla", "Toroidal lattice"),
                            ("ws", "Watts-Strogatz"),
                            ("ba", "Barabasi-Albert"),
                            ("wax", "Waxman"),
                            ("cn", "Community network"),
                            ("file", "Edge list file"),
                        ],
                        max_length=10,
                        verbose_name="Model",
                    ),
                ),
                (
                    "params",
                    models.JSONField(blank=True, default=dict, verbose_name="Generator parameters"),
                ),
                ("seed", models.PositiveBigIntegerField(default=0, verbose_name="Seed")),
                ("num_nodes", models.PositiveIntegerField(default=0, verbose_name="Nodes")),
                ("num_edges", models.PositiveIntegerField(default=0, verbose_name="Edges")),
                ("mean_degree", models.FloatField(default=0.0, verbose_name="Mean degree")),
                ("dropped_edges", models.PositiveIntegerField(default=0, verbose_name="Dropped edges")),
                (
                    "edge_list",
                    models.FileField(
                        blank=True,
                        upload_to=knowledge_walks.networks.models.edge_list_upload_to,
                        verbose_name="Edge list",
                    ),
                ),
                (
                    "created_by",
                    models.ForeignKey(
                        blank=True,
                        null=True,
                        on_delete=django.db.models.deletion.SET_NULL,
                        related_name="network_created",
                        to=settings.AUTH_USER_MODEL,
                    ),
                ),
                (
                    "updated_by",
                    models.ForeignKey(
                        blank=True,
                        null=True,
                        on_delete=django.db.models.deletion.SET_NULL,
                        related_name="network_updated",
                        to=settings.AUTH_USER_MODEL,
                    ),
                ),
            ],
            options={
                "verbose_name": "Network",
                "verbose_name_plural": "Networks",
                "ordering": ["-created_at"],
            },
        ),
    ]
