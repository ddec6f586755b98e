from fractions import Fraction

from django.db import models, transaction
from django.db.models import CheckConstraint, F, Index, Q, UniqueConstraint

from .reports import Inequality, SweepSummary, VerificationReport


class VerificationRun(models.Model):
    scope = models.CharField(max_length=255)
    max_rank = models.PositiveSmallIntegerField()
    total = models.PositiveIntegerField(default=0)
    failed = models.PositiveIntegerField(default=0)
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ["-created_at"]
        constraints = [
            CheckConstraint(condition=Q(failed__lte=F("total")), name="failed_within_total"),
        ]

    def __str__(self) -> str:  # pragma: no cover - simple repr
        return f"{self.scope} (rank <= {self.max_rank}): {self.failed}/{self.total} failed"

    @property
    def passed(self) -> bool:
        return self.failed == 0

    @classmethod
    def record(cls, scope: str, max_rank: int, reports: list[VerificationReport]) -> "VerificationRun":
        summary = SweepSummary.of(reports)
        with transaction.atomic():
            run = cls.objects.create(scope=scope, max_rank=max_rank, total=summary.total, failed=summary.failed)
            ReportRow.objects.bulk_create(
                [ReportRow.from_report(run, position, report) for position, report in enumerate(reports)]
            )
        return run


class ReportRow(models.Model):
    run = models.ForeignKey(VerificationRun, on_delete=models.CASCADE, related_name="rows")
    position = models.PositiveIntegerField()
    instance_id = models.CharField(max_length=255)
    dim_x = models.PositiveIntegerField()
    picard_bound = models.PositiveIntegerField()
    inequality = models.CharField(max_length=32, choices=Inequality.choices)
    # Exact rationals stored as "p/q" strings
    lhs = models.CharField(max_length=64)
    rhs = models.CharField(max_length=64)
    passed = models.BooleanField()
    slack = models.CharField(max_length=64)
    note = models.CharField(max_length=255, blank=True, default="")

    class Meta:
        ordering = ["run", "position"]
        indexes = [
            Index(fields=["run", "passed"], name="report_row_run_passed_idx"),
            Index(fields=["instance_id"], name="report_row_instance_idx"),
        ]
        constraints = [
            UniqueConstraint(fields=["run", "position"], name="unique_row_position"),
        ]

    def __str__(self) -> str:  # pragma: no cover - simple repr
        return f"{self.instance_id} {self.inequality}"

    @classmethod
    def from_report(cls, run: VerificationRun, position: int, report: VerificationReport) -> "ReportRow":
        return cls(
            run=run,
            position=position,
            instance_id=report.instance_id,
            dim_x=report.dim_x,
            picard_bound=report.picard_bound,
            inequality=report.inequality.value,
            lhs=str(report.lhs),
            rhs=str(report.rhs),
            passed=report.passed,
            slack=str(report.slack),
            note=report.note,
        )

    def to_report(self) -> VerificationReport:
        return VerificationReport(
            instance_id=self.instance_id,
            dim_x=self.dim_x,
            picard_bound=self.picard_bound,
            inequality=Inequality(self.inequality),
            lhs=Fraction(self.lhs),
            rhs=Fraction(self.rhs),
            passed=self.passed,
            slack=Fraction(self.slack),
            note=self.note,
        )
