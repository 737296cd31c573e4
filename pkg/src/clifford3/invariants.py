"""Curves, bundle invariants and exact half-integer arithmetic.

Everything here is an immutable value; operations are pure functions.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import CongruenceViolation, OutOfModeledRange, RankUnsupported


@dataclass(frozen=True)
class Curve:
    """A smooth projective curve of genus >= 2, known only through its genus
    and whether it carries a degree-2 pencil (hyperelliptic)."""

    genus: int
    hyperelliptic: bool = False

    def __post_init__(self):
        if self.genus < 2:
            raise ValueError(f"genus must be >= 2, got {self.genus}")

    @property
    def canonical_degree(self) -> int:
        return 2 * self.genus - 2


@dataclass(frozen=True, order=True)
class HalfInt:
    """An exact multiple of 1/2, stored as twice its value.

    ``HalfInt(doubled=k)`` represents k/2.  Floor uses floor semantics for
    any sign.
    """

    doubled: int

    @classmethod
    def whole(cls, v: int) -> "HalfInt":
        return cls(2 * v)

    def _coerce(self, other) -> "HalfInt":
        if isinstance(other, HalfInt):
            return other
        if isinstance(other, int):
            return HalfInt.whole(other)
        return NotImplemented

    def __add__(self, other) -> "HalfInt":
        other = self._coerce(other)
        return HalfInt(self.doubled + other.doubled)

    __radd__ = __add__

    def __sub__(self, other) -> "HalfInt":
        other = self._coerce(other)
        return HalfInt(self.doubled - other.doubled)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.doubled)

    def floor(self) -> int:
        return self.doubled // 2

    def __str__(self) -> str:
        if self.doubled % 2 == 0:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"


def halves(doubled: int) -> HalfInt:
    """The half-integer doubled/2."""
    return HalfInt(doubled)


@dataclass(frozen=True)
class BundleInvariants:
    """Discrete invariants of a vector bundle: rank n in {1,2,3}, degree d and
    the stability degrees (s_1, ..., s_{n-1}).

    s_r is r*d minus n times the maximal degree of a rank-r subbundle, so
    s_r == r*d (mod n) for any actual bundle.  Instances are plain records;
    call :func:`validate` to check the congruences.
    """

    rank: int
    degree: int
    s: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "s", tuple(self.s))

    def semistable(self) -> bool:
        return all(v >= 0 for v in self.s)

    def stable(self) -> bool:
        return all(v > 0 for v in self.s)


def validate(inv: BundleInvariants) -> None:
    """Check rank support and the congruences s_r == r*d (mod n).

    Raises RankUnsupported or CongruenceViolation.  Geometric existence of a
    bundle with these invariants is *not* checked; results downstream are
    conditional on existence.
    """
    if inv.rank not in (1, 2, 3):
        raise RankUnsupported(f"rank {inv.rank} not supported")
    if len(inv.s) != inv.rank - 1:
        raise RankUnsupported(
            f"rank {inv.rank} needs {inv.rank - 1} stability degrees, got {len(inv.s)}"
        )
    for r, sr in enumerate(inv.s, start=1):
        if (sr - r * inv.degree) % inv.rank != 0:
            raise CongruenceViolation(
                r, f"s_{r}={sr} is not congruent to {r}*d={r * inv.degree} mod {inv.rank}"
            )


def serre_dual(c: Curve, inv: BundleInvariants) -> BundleInvariants:
    """Invariants of the dual bundle twisted by the canonical bundle.

    Degree maps to n(2g-2) - d and the stability degrees reverse; applying
    twice is the identity.
    """
    validate(inv)
    return BundleInvariants(
        inv.rank,
        inv.rank * c.canonical_degree - inv.degree,
        tuple(reversed(inv.s)),
    )


def twist_by_line(inv: BundleInvariants, a: int) -> BundleInvariants:
    """Invariants after tensoring with a line bundle of degree a."""
    validate(inv)
    return BundleInvariants(inv.rank, inv.degree + inv.rank * a, inv.s)


def h0_hyperelliptic_power(c: Curve, a: int, extra_general_point: bool = False) -> int:
    """Exact section count of the a-th power of the degree-2 pencil.

    Returns a+1 for 0 <= a <= g-1 and 2a+1-g for a >= g.  With
    ``extra_general_point`` the bundle is twisted by a general point, which
    keeps the count at a+1 but is only modeled for a <= g-2.
    """
    if not c.hyperelliptic:
        raise ValueError("curve must be hyperelliptic")
    if a < 0:
        raise ValueError("exponent must be nonnegative")
    g = c.genus
    if extra_general_point:
        if a > g - 2:
            raise OutOfModeledRange(
                f"general-point twist modeled only for exponent <= g-2 = {g - 2}"
            )
        return a + 1
    if a <= g - 1:
        return a + 1
    return 2 * a + 1 - g


@dataclass(frozen=True)
class BoundResult:
    """An upper bound on h^0 together with its provenance.

    ``exact`` means the value equals h^0 (forced by vanishing or by a zero
    h^1), not merely bounds it.  ``assumptions`` lists the optional
    hypotheses the bound consumed.
    """

    value: int
    case: str
    exact: bool = False
    assumptions: tuple[str, ...] = ()

    def __post_init__(self):
        if self.value < 0:
            raise ValueError(f"bound value must be nonnegative, got {self.value}")
        object.__setattr__(self, "assumptions", tuple(self.assumptions))

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "case": self.case,
            "exact": self.exact,
            "assumptions": list(self.assumptions),
        }
