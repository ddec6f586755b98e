"""Exhaustive checks of the Picard-number bounds.

Affine instances are dimension patterns (type, rank, torus dimension t) with
the smallest dim X compatible with them; projective instances are the
parabolic subsets of each simple type. Product sweeps combine one choice per
factor. Below the configured sample limit every combination is checked;
above it a seeded sample of that size is drawn.
"""
import itertools
import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from django.db import models

from . import conf
from .classical import min_homspace_dim, verify_affine_classical
from .exceptions import DomainError
from .maxdim import exceptional_floor
from .parabolic import flag_invariants, iter_parabolics
from .reports import Inequality, VerificationReport, affine_checks, projective_checks
from .rootsys import SimpleType, build_root_system

logger = logging.getLogger(__name__)


class Mode(models.TextChoices):
    AFFINE = "affine", "Affine"
    PROJECTIVE = "projective", "Projective"


class Verdict(models.TextChoices):
    EXCLUDED = "excluded", "Excluded"
    NOT_EXCLUDED = "not-excluded", "Not excluded"


@dataclass(frozen=True)
class SweepOptions:
    sample_limit: int = field(default_factory=conf.sample_limit)
    seed: int = field(default_factory=conf.sample_seed)


@dataclass(frozen=True)
class SemisimpleProduct:
    """An almost-direct product G_1 . G_2 . ... . G_m of simple groups."""

    factors: tuple[SimpleType, ...]

    def __post_init__(self):
        factors = tuple(self.factors)
        if not factors:
            raise DomainError("a semisimple product needs at least one factor", code="factors")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def parse(cls, text: str) -> "SemisimpleProduct":
        return cls(tuple(SimpleType.parse(t) for t in (text or "").split(",") if t.strip()))

    @property
    def min_rank(self) -> int:
        return min(f.rank for f in self.factors)

    @property
    def label(self) -> str:
        return "x".join(str(f) for f in self.factors)


def affine_floor(stype: SimpleType, t: int) -> int:
    """Smallest dim X of an affine G/H for a simple G whose stabilizer has a t-dimensional centre."""
    if t == 0:
        return 0
    if stype.is_exceptional:
        return exceptional_floor(stype, t)
    return min_homspace_dim(stype.family, stype.rank, t)


def verify_projective_simple(stype: SimpleType, options: SweepOptions | None = None) -> list[VerificationReport]:
    """Every proper parabolic of a simple type. Always exhaustive.

    ``options`` is unused; it keeps the signature of every sweep the same so
    collect_reports can call them interchangeably.
    """
    rs = build_root_system(stype)
    reports = []
    for spec in iter_parabolics(rs, proper=True):
        inv = flag_invariants(spec)
        reports += projective_checks(f"{rs.stype}/I={spec.label}", inv.dim_x, inv.picard_rank, rs.rank)
    logger.debug("projective sweep %s: %d rows", rs.stype, len(reports))
    return reports


def verify_affine_simple(stype: SimpleType, options: SweepOptions | None = None) -> list[VerificationReport]:
    """Every centre dimension 1..rank of a simple type. Always exhaustive; ``options`` is unused."""
    if not stype.is_exceptional:
        return verify_affine_classical(stype.family, stype.rank, min_rank=stype.rank)
    reports = []
    for t in range(1, stype.rank + 1):
        reports += affine_checks(f"{stype}/t={t}", exceptional_floor(stype, t), t, stype.rank)
    return reports


def _choices(stype: SimpleType, mode: Mode) -> list[tuple[str, int, int]]:
    """Per-factor options as (label, picard bound, dim X)."""
    if mode == Mode.AFFINE:
        return [(str(t), t, affine_floor(stype, t)) for t in range(stype.rank + 1)]
    rs = build_root_system(stype)
    options = []
    for spec in iter_parabolics(rs):
        inv = flag_invariants(spec)
        options.append((spec.label, inv.picard_rank, inv.dim_x))
    return options


def _combinations(per_factor: list[list], options: SweepOptions) -> Iterable[tuple]:
    total = math.prod(len(c) for c in per_factor)
    if total <= options.sample_limit:
        yield from itertools.product(*per_factor)
        return
    logger.warning(
        "product sweep has %d combinations; checking a sample of %d (seed %d)",
        total, options.sample_limit, options.seed,
    )
    for index in sorted(random.Random(options.seed).sample(range(total), options.sample_limit)):
        combo = []
        for choices in reversed(per_factor):
            index, digit = divmod(index, len(choices))
            combo.append(choices[digit])
        yield tuple(reversed(combo))


def verify_semisimple_product(
    product: SemisimpleProduct, mode: Mode, options: SweepOptions | None = None
) -> list[VerificationReport]:
    mode = Mode(mode)
    options = options or SweepOptions()
    per_factor = [_choices(f, mode) for f in product.factors]
    bound_rank = product.min_rank + 1
    row = VerificationReport.compare
    reports = []
    for combo in _combinations(per_factor, options):
        picard = sum(c[1] for c in combo)
        dim_x = sum(c[2] for c in combo)
        if picard == 0:
            continue
        key = "t=" if mode == Mode.AFFINE else "I="
        instance = f"{product.label}/{key}{';'.join(c[0] for c in combo)}"
        if mode == Mode.AFFINE:
            reports += [
                row(instance, dim_x, picard, Inequality.COR_SS, picard, Fraction(dim_x, bound_rank)),
                row(instance, dim_x, picard, Inequality.COR_HALF, picard, Fraction(dim_x, 2)),
                row(instance, dim_x, picard, Inequality.PROP1, picard, dim_x),
                row(instance, dim_x, picard, Inequality.PROP1_AFFINE_STRICT, picard, dim_x),
            ]
        else:
            reports += [
                row(instance, dim_x, picard, Inequality.COR_PROJ_SS, picard, Fraction(2 * dim_x, bound_rank)),
                row(instance, dim_x, picard, Inequality.PROP1, picard, dim_x),
            ]
    return reports


def collect_reports(
    types: Iterable[SimpleType], modes: Iterable[Mode], options: SweepOptions | None = None
) -> list[VerificationReport]:
    """Affine rows for every type first, then projective rows, each in type order."""
    options = options or SweepOptions()
    types = list(types)
    reports = []
    for mode in modes:
        sweep = verify_affine_simple if Mode(mode) == Mode.AFFINE else verify_projective_simple
        for stype in types:
            reports += sweep(stype, options)
    logger.info("collected %d rows over %d types", len(reports), len(types))
    return reports


def flag_variety_verdict(dim_x: int, rho: int) -> Verdict:
    """A projective variety with rho > dim X cannot be a generalized flag variety.

    Nothing is certified in the other direction.
    """
    if dim_x < 1 or rho < 1:
        raise DomainError(f"dim and rho must be positive, got dim={dim_x}, rho={rho}", code="verdict")
    return Verdict.EXCLUDED if rho > dim_x else Verdict.NOT_EXCLUDED
