"""Verification rows and their summaries.

Every comparison is exact. Square-root bounds are checked on squares, so
``rho < sqrt(2 dim X)`` is stored as lhs = rho^2, rhs = 2 dim X.
"""
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Iterable

from django.db import models


class Inequality(models.TextChoices):
    PROP1 = "prop1", "rho <= dim X"
    PROP1_AFFINE_STRICT = "prop1_affine_strict", "rho < dim X (affine, dim X > 0)"
    THM_AFFINE = "thm_affine", "rho <= dim X / (rk G + 1)"
    COR_SS = "cor_ss", "rho <= dim X / (1 + min rk G_i)"
    COR_HALF = "cor_half", "rho <= dim X / 2"
    COR_SQRT_AFFINE = "cor_sqrt_affine", "rho^2 < dim X"
    THM_PROJ_LINEAR = "thm_proj_linear", "rho <= 2 dim X / (rk G + 1)"
    THM_PROJ_SQRT = "thm_proj_sqrt", "rho^2 < 2 dim X"
    COR_PROJ_SS = "cor_proj_ss", "rho <= 2 dim X / (1 + min rk G_i)"


STRICT = frozenset({Inequality.PROP1_AFFINE_STRICT, Inequality.COR_SQRT_AFFINE, Inequality.THM_PROJ_SQRT})


@dataclass(frozen=True)
class VerificationReport:
    instance_id: str
    dim_x: int
    picard_bound: int
    inequality: Inequality
    lhs: Fraction
    rhs: Fraction
    passed: bool
    slack: Fraction
    note: str = ""

    @classmethod
    def compare(cls, instance_id, dim_x, picard_bound, inequality, lhs, rhs, note="") -> "VerificationReport":
        inequality = Inequality(inequality)
        lhs, rhs = Fraction(lhs), Fraction(rhs)
        passed = lhs < rhs if inequality in STRICT else lhs <= rhs
        return cls(instance_id, dim_x, picard_bound, inequality, lhs, rhs, passed, rhs - lhs, note)

    def to_dict(self) -> dict:
        return {
            "instance_id": self.instance_id,
            "dim_x": self.dim_x,
            "picard_bound": self.picard_bound,
            "inequality": self.inequality.value,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "passed": self.passed,
            "slack": str(self.slack),
            "note": self.note,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        return cls(
            instance_id=data["instance_id"],
            dim_x=int(data["dim_x"]),
            picard_bound=int(data["picard_bound"]),
            inequality=Inequality(data["inequality"]),
            lhs=Fraction(data["lhs"]),
            rhs=Fraction(data["rhs"]),
            passed=data["passed"] in (True, "True", "true", "1"),
            slack=Fraction(data["slack"]),
            note=data.get("note", ""),
        )


REPORT_FIELDS = tuple(f.name for f in fields(VerificationReport))


def affine_checks(instance_id: str, dim_x: int, picard: int, rank: int, note: str = "") -> list[VerificationReport]:
    """Rows for an affine G/H of a simple group of the given rank."""
    row = VerificationReport.compare
    return [
        row(instance_id, dim_x, picard, Inequality.THM_AFFINE, picard, Fraction(dim_x, rank + 1), note),
        row(instance_id, dim_x, picard, Inequality.COR_HALF, picard, Fraction(dim_x, 2), note),
        row(instance_id, dim_x, picard, Inequality.COR_SQRT_AFFINE, picard * picard, dim_x, note),
        row(instance_id, dim_x, picard, Inequality.PROP1, picard, dim_x, note),
        row(instance_id, dim_x, picard, Inequality.PROP1_AFFINE_STRICT, picard, dim_x, note),
    ]


def projective_checks(instance_id: str, dim_x: int, picard: int, rank: int) -> list[VerificationReport]:
    """Rows for a flag variety G/P of a simple group of the given rank."""
    row = VerificationReport.compare
    return [
        row(instance_id, dim_x, picard, Inequality.THM_PROJ_LINEAR, picard, Fraction(2 * dim_x, rank + 1)),
        row(instance_id, dim_x, picard, Inequality.THM_PROJ_SQRT, picard * picard, 2 * dim_x),
        row(instance_id, dim_x, picard, Inequality.PROP1, picard, dim_x),
    ]


@dataclass(frozen=True)
class SweepSummary:
    total: int
    failed: int
    instances: int
    min_slack: dict

    @classmethod
    def of(cls, reports: Iterable[VerificationReport]) -> "SweepSummary":
        reports = list(reports)
        slack = {}
        for r in reports:
            if r.inequality not in slack or r.slack < slack[r.inequality]:
                slack[r.inequality] = r.slack
        ordered = {i: slack[i] for i in Inequality if i in slack}
        return cls(
            total=len(reports),
            failed=sum(not r.passed for r in reports),
            instances=len({r.instance_id for r in reports}),
            min_slack=ordered,
        )

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def line(self) -> str:
        slack = ", ".join(f"{i.value}={s}" for i, s in self.min_slack.items()) or "none"
        return (
            f"checked {self.total} rows over {self.instances} instances: "
            f"{self.failed} failed; min slack {slack}"
        )
