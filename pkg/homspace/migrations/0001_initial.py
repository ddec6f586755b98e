# Generated by Django 5.1 on 2026-10-18 09:30

import django.db.models.deletion
from django.db import migrations, models


class Migration(migrations.Migration):
    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name="VerificationRun",
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
                ("scope", models.CharField(max_length=255)),
                ("max_rank", models.PositiveSmallIntegerField()),
                ("total", models.PositiveIntegerField(default=0)),
                ("failed", models.PositiveIntegerField(default=0)),
                ("created_at", models.DateTimeField(auto_now_add=True)),
            ],
            options={
                "ordering": ["-created_at"],
                "constraints": [
                    models.CheckConstraint(
                        condition=models.Q(("failed__lte", models.F("total"))),
                        name="failed_within_total",
                    )
                ],
            },
        ),
        migrations.CreateModel(
            name="ReportRow",
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
                ("position", models.PositiveIntegerField()),
                ("instance_id", models.CharField(max_length=255)),
                ("dim_x", models.PositiveIntegerField()),
                ("picard_bound", models.PositiveIntegerField()),
                (
                    "inequality",
                    models.CharField(
                        choices=[
                            ("prop1", "rho <= dim X"),
                            ("prop1_affine_strict", "rho < dim X (affine, dim X > 0)"),
                            ("thm_affine", "rho <= dim X / (rk G + 1)"),
                            ("cor_ss", "rho <= dim X / (1 + min rk G_i)"),
                            ("cor_half", "rho <= dim X / 2"),
                            ("cor_sqrt_affine", "rho^2 < dim X"),
                            ("thm_proj_linear", "rho <= 2 dim X / (rk G + 1)"),
                            ("thm_proj_sqrt", "rho^2 < 2 dim X"),
                            ("cor_proj_ss", "rho <= 2 dim X / (1 + min rk G_i)"),
                        ],
                        max_length=32,
                    ),
                ),
                ("lhs", models.CharField(max_length=64)),
                ("rhs", models.CharField(max_length=64)),
                ("passed", models.BooleanField()),
                ("slack", models.CharField(max_length=64)),
                ("note", models.CharField(blank=True, default="", max_length=255)),
                (
                    "run",
                    models.ForeignKey(
                        on_delete=django.db.models.deletion.CASCADE,
                        related_name="rows",
                        to="homspace.verificationrun",
                    ),
                ),
            ],
            options={
                "ordering": ["run", "position"],
                "indexes": [
                    models.Index(fields=["run", "passed"], name="report_row_run_passed_idx"),
                    models.Index(fields=["instance_id"], name="report_row_instance_idx"),
                ],
                "constraints": [
                    models.UniqueConstraint(fields=("run", "position"), name="unique_row_position")
                ],
            },
        ),
    ]
