"""Centralizer dimensions for eigenvalue patterns in sl, so and sp.

A central semisimple element x of a reductive subalgebra h of a classical
algebra g is diagonal with k classes of nonzero eigenvalues. Elements of h
commute with x, so h sits inside the block centralizer of x and

    dim X = dim g - dim h >= dim g - max centralizer_dim,

with rho(X) <= dim t <= k.

The maximum over patterns is found by exhaustive enumeration. The closed
forms are cross-checks only, including where their stated maximiser is not
itself a valid pattern.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy.utilities.iterables import ordered_partitions

from .exceptions import DomainError
from .reports import VerificationReport, affine_checks
from .rootsys import CLASSICAL_FAMILIES, MIN_RANK, Family, SimpleType

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EigenPattern:
    """Multiplicities of the distinct eigenvalues of a diagonal element.

    Type A uses ``multiplicities`` (n_1, ..., n_{k+1}), summing to l + 1.
    Types B, C, D use ``pairs`` of (n_i, m_i) for the eigenvalues +x_i / -x_i
    and ``zero_multiplicity`` N_0, with sum(n_i + m_i) + N_0 = l.
    """

    family: Family
    rank: int
    multiplicities: tuple[int, ...] = ()
    pairs: tuple[tuple[int, int], ...] = ()
    zero_multiplicity: int = 0

    def __post_init__(self):
        stype = SimpleType(self.family, self.rank)
        if stype.family not in CLASSICAL_FAMILIES:
            raise DomainError(f"eigenvalue patterns are defined for A, B, C, D only, not {stype}", code="family")
        object.__setattr__(self, "family", stype.family)
        object.__setattr__(self, "multiplicities", tuple(self.multiplicities))
        object.__setattr__(self, "pairs", tuple(tuple(p) for p in self.pairs))

        if self.family == Family.A:
            if self.pairs or self.zero_multiplicity:
                raise DomainError("type A patterns take multiplicities only", code="pattern")
            if not self.multiplicities or any(n < 1 for n in self.multiplicities):
                raise DomainError(f"multiplicities must be positive: {self.multiplicities}", code="pattern")
            if sum(self.multiplicities) != self.rank + 1:
                raise DomainError(
                    f"multiplicities {self.multiplicities} must sum to l + 1 = {self.rank + 1}", code="pattern"
                )
            return

        if self.multiplicities:
            raise DomainError(f"type {self.family.value} patterns take pairs and a zero multiplicity", code="pattern")
        if self.zero_multiplicity < 0:
            raise DomainError(f"zero multiplicity must be >= 0, got {self.zero_multiplicity}", code="pattern")
        for n, m in self.pairs:
            if n < 0 or m < 0 or n + m < 1:
                raise DomainError(f"pair ({n}, {m}) must be nonnegative with n + m >= 1", code="pattern")
        if sum(self.block_sizes) + self.zero_multiplicity != self.rank:
            raise DomainError(
                f"block sizes {self.block_sizes} plus N_0 = {self.zero_multiplicity} must sum to l = {self.rank}",
                code="pattern",
            )

    @property
    def k(self) -> int:
        if self.family == Family.A:
            return len(self.multiplicities) - 1
        return len(self.pairs)

    @property
    def block_sizes(self) -> tuple[int, ...]:
        if self.family == Family.A:
            return self.multiplicities
        return tuple(n + m for n, m in self.pairs)

    def swapped(self) -> "EigenPattern":
        return EigenPattern(
            self.family, self.rank, self.multiplicities, tuple((m, n) for n, m in self.pairs), self.zero_multiplicity
        )


def centralizer_dim(pattern: EigenPattern) -> int:
    squares = sum(n * n for n in pattern.block_sizes)
    if pattern.family == Family.A:
        return squares - 1
    n0 = pattern.zero_multiplicity
    if pattern.family == Family.D:
        return squares + 2 * n0 * n0 - n0
    return squares + 2 * n0 * n0 + n0


def _check_range(family, l: int, k: int) -> SimpleType:
    stype = SimpleType(family, l)
    if stype.family not in CLASSICAL_FAMILIES:
        raise DomainError(f"{stype} is not a classical type", code="family")
    if not 1 <= k <= l:
        raise DomainError(f"k = {k} out of range 1..{l} for {stype}", code="k")
    return stype


@lru_cache(maxsize=None)
def _max_square_sum(total: int, parts: int) -> tuple[int, tuple[int, ...]]:
    """Largest sum of squares over partitions of total into exactly parts blocks, blocks non-increasing."""
    best = None
    for ascending in ordered_partitions(total, parts):
        blocks = tuple(sorted(ascending, reverse=True))
        value = sum(n * n for n in blocks)
        if best is None or value > best[0]:
            best = (value, blocks)
    return best


def max_centralizer_dim(family, l: int, k: int) -> tuple[int, EigenPattern]:
    """Largest centralizer over all patterns with exactly k nonzero eigenvalue classes.

    Scans N_0 upward; the first maximiser found is returned. For a fixed N_0
    the best block sizes are unique.
    """
    stype = _check_range(family, l, k)
    if stype.family == Family.A:
        _, blocks = _max_square_sum(l + 1, k + 1)
        pattern = EigenPattern(Family.A, l, multiplicities=blocks)
        return centralizer_dim(pattern), pattern

    best = None
    for n0 in range(0, l - k + 1):
        _, blocks = _max_square_sum(l - n0, k)
        pattern = EigenPattern(stype.family, l, pairs=tuple((n, 0) for n in blocks), zero_multiplicity=n0)
        value = centralizer_dim(pattern)
        if best is None or value > best[0]:
            best = (value, pattern)
    return best


def min_homspace_dim(family, l: int, k: int) -> int:
    """Guaranteed lower bound on dim X for an affine G/H with dim t = k."""
    stype = _check_range(family, l, k)
    return stype.dimension - max_centralizer_dim(stype.family, l, k)[0]


def closed_form_max_centralizer(family, l: int, k: int) -> int:
    stype = _check_range(family, l, k)
    d = l - k
    if stype.family == Family.A:
        return k - 1 + (l + 1 - k) ** 2
    if stype.family == Family.D:
        # The quadratic in N_0 has its minimum at d/3 + 1/2; the far endpoint wins once that is <= d/2.
        if Fraction(d, 3) + Fraction(1, 2) <= Fraction(d, 2):
            return k + 2 * d * d - d
        return k - 1 + (d + 1) ** 2
    if stype.family == Family.C and l == k:
        return k - 1 + (d + 1) ** 2
    return 2 * d * d + l


def closed_form_min_homspace_dim(family, l: int, k: int) -> int:
    stype = _check_range(family, l, k)
    if stype.family == Family.A:
        return k * (2 * l + 1 - k)
    if stype.family == Family.D:
        if l - k >= 3:
            return 2 * k * (2 * l - k - 1)
        # dim g - (k - 1 + (l - k + 1)^2), expanded
        return l * (l - 3) + k * (2 * l + 1 - k)
    return 2 * k * (2 * l - k)


def closed_form_note(family, l: int, k: int) -> str:
    """Describe where the closed-form maximiser differs from the enumerated witness."""
    stype = _check_range(family, l, k)
    value, witness = max_centralizer_dim(stype.family, l, k)
    closed = closed_form_max_centralizer(stype.family, l, k)
    if closed != value:
        return f"closed form {closed} disagrees with enumerated maximum {value}"
    if stype.family == Family.C and l == k:
        return (
            f"closed-form maximiser has an empty block N_k = l - k = 0; "
            f"enumerated witness N = {witness.block_sizes}, N_0 = {witness.zero_multiplicity}"
        )
    if stype.family == Family.D and l - k >= 3:
        return f"closed form attained with every N_i = 1 and N_0 = {l - k}"
    return ""


def verify_affine_classical(family, max_rank: int, min_rank: int | None = None) -> list[VerificationReport]:
    """Check the affine bounds for every rank in range and every 1 <= k <= l."""
    family = Family(family)
    if family not in CLASSICAL_FAMILIES:
        raise DomainError(f"{family.value} is not a classical family", code="family")
    start = MIN_RANK[family] if min_rank is None else min_rank
    SimpleType(family, start)  # validates the starting rank
    reports = []
    for l in range(start, max_rank + 1):
        for k in range(1, l + 1):
            floor = min_homspace_dim(family, l, k)
            note = closed_form_note(family, l, k)
            reports += affine_checks(f"{family.value}{l}/k={k}", floor, k, l, note)
    failed = sum(not r.passed for r in reports)
    if failed:
        logger.warning("%s affine sweep up to rank %d: %d failed rows", family.value, max_rank, failed)
    return reports
