"""Parabolic subalgebras p_I, indexed by subsets I of the simple roots.

I is stored as a set of Bourbaki indices 1..rank. The empty set gives the
Borel subalgebra and the full set gives the whole algebra (X is a point).
Each parabolic is represented up to conjugacy by its unique I.

The Picard rank reported here is k = |P| - |I|. The general argument only
bounds rho(X) by k; for the simply connected group equality holds, and that
is the value returned. Only rho(X) is bounded by k here, not dim X.
"""
from dataclasses import dataclass
from typing import Iterator

from .exceptions import DomainError, InvariantViolation
from .rootsys import Root, RootSystem, algebra_dimension


@dataclass(frozen=True)
class ParabolicSpec:
    rs: RootSystem
    subset: frozenset[int]

    def __post_init__(self):
        subset = frozenset(self.subset)
        bad = sorted(
            str(i) for i in subset if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= self.rs.rank
        )
        if bad:
            raise DomainError(
                f"parabolic index {', '.join(bad)} out of range 1..{self.rs.rank} for {self.rs.stype}",
                code="index",
            )
        object.__setattr__(self, "subset", subset)

    @classmethod
    def parse(cls, rs: RootSystem, text: str) -> "ParabolicSpec":
        """Comma-separated indices; the empty string is the Borel subalgebra."""
        indices = set()
        for token in (text or "").split(","):
            token = token.strip()
            if not token:
                continue
            if not token.isdecimal():
                raise DomainError(f"malformed parabolic index {token!r}", code="token")
            indices.add(int(token))
        return cls(rs, frozenset(indices))

    @property
    def label(self) -> str:
        return "{" + ",".join(str(i) for i in sorted(self.subset)) + "}"

    @property
    def is_borel(self) -> bool:
        return not self.subset

    @property
    def is_full(self) -> bool:
        return len(self.subset) == self.rs.rank


@dataclass(frozen=True)
class FlagInvariants:
    dim_x: int
    picard_rank: int
    dim_parabolic: int
    dim_levi: int
    dim_unipotent_radical: int
    dim_algebra: int


def iter_parabolics(rs: RootSystem, proper: bool = False) -> Iterator[ParabolicSpec]:
    """All 2^rank subsets in bitmask order (bit j-1 set means index j is in I)."""
    full = (1 << rs.rank) - 1
    for mask in range(full if proper else full + 1):
        yield ParabolicSpec(rs, frozenset(j + 1 for j in range(rs.rank) if mask >> j & 1))


def closure_sets(spec: ParabolicSpec) -> tuple[tuple[Root, ...], tuple[Root, ...]]:
    """Positive and negative roots whose support lies inside I."""
    rs = spec.rs
    plus = tuple(r for r in rs.positive if rs.supports[r] <= spec.subset)
    minus = tuple(r for r in rs.negative if rs.supports[r] <= spec.subset)
    return plus, minus


def parabolic_dimension(spec: ParabolicSpec) -> int:
    _, minus = closure_sets(spec)
    return spec.rs.rank + len(spec.rs.positive) + len(minus)


def levi_dimension(spec: ParabolicSpec) -> int:
    plus, minus = closure_sets(spec)
    return spec.rs.rank + len(plus) + len(minus)


def flag_invariants(spec: ParabolicSpec) -> FlagInvariants:
    rs = spec.rs
    plus, minus = closure_sets(spec)
    if len(plus) != len(minus):
        raise InvariantViolation(f"{rs.stype} I={spec.label}: |I+| = {len(plus)} but |I-| = {len(minus)}")

    dim_algebra = algebra_dimension(rs.stype)
    dim_parabolic = parabolic_dimension(spec)
    dim_levi = levi_dimension(spec)
    dim_x = len(rs.positive) - len(plus)
    if dim_x != dim_algebra - dim_parabolic or 2 * dim_x != dim_algebra - dim_levi:
        raise InvariantViolation(
            f"{rs.stype} I={spec.label}: dim X = {dim_x} disagrees with "
            f"dim g = {dim_algebra}, dim p = {dim_parabolic}, dim levi = {dim_levi}"
        )
    return FlagInvariants(
        dim_x=dim_x,
        picard_rank=rs.rank - len(spec.subset),
        dim_parabolic=dim_parabolic,
        dim_levi=dim_levi,
        dim_unipotent_radical=dim_parabolic - dim_levi,
        dim_algebra=dim_algebra,
    )
