"""Sharpness witnesses on hyperelliptic curves.

Three families of rank-3 bundles built from powers of the degree-2 pencil,
general points and general elementary transformations, with their exact
section counts, the applicable bound and a sharpness verdict; plus direct
sums witnessing the unstable bounds.

The stability degrees of the constructed bundles are asserted data of the
constructions (there is no general direct-sum calculus for them); the exact
section counts come only from the two hyperelliptic formulas of the
invariants module.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .bounds import (
    Rank3Query,
    h0_prop21_bound,
    h0_rank2_bound,
    h0_rank3_semistable_bound,
    h0_rank3_unstable_bound,
    slope_bound,
)
from .elmtrans import s2_lower_bound_track
from .errors import ParamsOutOfRange, UnrealizableF
from .invariants import BoundResult, BundleInvariants, Curve, h0_hyperelliptic_power


@dataclass(frozen=True)
class FamilyAParams:
    """Parameters for the family with both stability degrees zero: the sum of
    a pencil power and a twisted rank-2 bundle with s1 = 4n+2."""

    g: int
    n: int
    k: int

    def __post_init__(self):
        if self.g < 3:
            raise ParamsOutOfRange("this family needs genus >= 3")
        if self.n < 0:
            raise ParamsOutOfRange("n must be nonnegative")
        m = 4 * self.n + 2
        if m > self.g:
            raise ParamsOutOfRange(f"needs 4n+2 <= g, got {m} > {self.g}")
        if not 0 <= self.k <= self.g - 2 - m // 2:
            raise ParamsOutOfRange(
                f"k must lie in [0, {self.g - 2 - m // 2}], got {self.k}"
            )

    @property
    def m(self) -> int:
        return 4 * self.n + 2


@dataclass(frozen=True)
class FamilyBParams:
    """Parameters for the stable family: m general transformations of the
    split rank-3 seed, m even with 2 <= m <= g (m = 1 also allowed at g = 2)."""

    g: int
    m: int

    def __post_init__(self):
        if self.g < 2:
            raise ParamsOutOfRange("genus must be >= 2")
        if self.g == 2 and self.m == 1:
            return
        if self.m % 2 != 0 or not 2 <= self.m <= self.g:
            raise ParamsOutOfRange(
                f"m must be even with 2 <= m <= g (or m=1 at g=2), got m={self.m}"
            )


@dataclass(frozen=True)
class FamilyCParams:
    """Parameters for the twisted one- and two-step transformation families."""

    g: int
    variant: str  # "E1" or "E2"
    k: int

    def __post_init__(self):
        if self.g < 2:
            raise ParamsOutOfRange("genus must be >= 2")
        if self.variant not in ("E1", "E2"):
            raise ParamsOutOfRange(f"variant must be E1 or E2, got {self.variant}")
        if not 0 <= self.k <= self.g - 2:
            raise ParamsOutOfRange(f"k must lie in [0, {self.g - 2}], got {self.k}")


@dataclass(frozen=True)
class ExampleReport:
    """A constructed bundle, its exact section count, the applicable bound and
    whether the bound is attained."""

    family: str
    curve: Curve
    inv: BundleInvariants
    exact_h0: int
    bound: BoundResult
    sharp: bool
    params: dict = field(default_factory=dict)
    slope: BoundResult | None = None
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.exact_h0 > self.bound.value:
            raise ValueError(
                f"exact h0 {self.exact_h0} exceeds the bound {self.bound.value}"
            )
        if self.sharp != (self.exact_h0 == self.bound.value):
            raise ValueError("sharp flag inconsistent with the values")

    def to_dict(self) -> dict:
        out = {
            "family": self.family,
            "genus": self.curve.genus,
            "params": dict(self.params),
            "rank": self.inv.rank,
            "degree": self.inv.degree,
            "s": list(self.inv.s),
            "exact_h0": self.exact_h0,
            "bound": self.bound.to_dict(),
            "sharp": self.sharp,
            "notes": list(self.notes),
        }
        if self.slope is not None:
            out["slope_bound"] = self.slope.to_dict()
        return out


def family_a(p: FamilyAParams) -> ExampleReport:
    """Sum of the (n+k+1)-st pencil power and a twisted rank-2 bundle with
    s1 = m = 4n+2: both stability degrees vanish and the quotient bound with
    hyperelliptic sharpening is attained."""
    curve = Curve(p.g, hyperelliptic=True)
    m = p.m
    d = 6 * (p.n + p.k + 1)
    inv = BundleInvariants(3, d, (0, 0))
    # rank-2 summand: degree m+4k+2, s1 = m; exact count pinned by matching
    # lower (two twisted point bundles) and upper (rank-2 bound) estimates
    low = 2 * (p.k + 1)
    up = h0_rank2_bound(curve, m + 4 * p.k + 2, m).value
    if low != up:
        raise ParamsOutOfRange(
            f"rank-2 summand count not pinned: lower {low}, upper {up}"
        )
    exact = h0_hyperelliptic_power(curve, p.n + p.k + 1) + low
    q = Rank3Query(curve, inv, s1f=m, use_hyperelliptic_sharpening=True)
    bound = h0_prop21_bound(q)
    return ExampleReport(
        "a",
        curve,
        inv,
        exact,
        bound,
        exact == bound.value,
        params={"n": p.n, "k": p.k, "m": m},
        notes=("s1 = s2 = 0 and s1f = m are asserted by the construction",),
    )


def family_b(p: FamilyBParams) -> ExampleReport:
    """m general transformations of the split rank-3 seed: degree 3+m,
    s1 = m, s2 at least the certified lower bound; exactly 3 sections, and
    the quotient bound with hyperelliptic sharpening gives exactly 3."""
    curve = Curve(p.g, hyperelliptic=True)
    d = 3 + p.m
    s2 = s2_lower_bound_track(p.m)
    inv = BundleInvariants(3, d, (p.m, s2))
    q = Rank3Query(curve, inv, s1f=p.m, use_hyperelliptic_sharpening=True)
    bound = h0_prop21_bound(q)  # raises HypothesisFailed when the window fails
    return ExampleReport(
        "b",
        curve,
        inv,
        3,
        bound,
        3 == bound.value,
        params={"m": p.m},
        notes=("s2 is a certified lower bound, sufficient for this bound",),
    )


def family_c(p: FamilyCParams) -> ExampleReport:
    """Twists of the one-step (E1) and two-step (E2) transformations of the
    split seed.  E1 attains the sharpened main bound at 3k+3; E2 falls short
    of it by exactly 1, and at k = 0 the slope bound certifies that for
    genus >= 3 while at genus 2 the bound 4 is attainable."""
    curve = Curve(p.g, hyperelliptic=True)
    exact = 3 * (p.k + 1)  # three twisted point-bundle summands
    slope = None
    notes: tuple[str, ...] = ()
    if p.variant == "E1":
        inv = BundleInvariants(3, 6 * p.k + 4, (1, 2))
    else:
        inv = BundleInvariants(3, 6 * p.k + 5, (2, 1))
        if p.k == 0:
            slope = slope_bound(p.g, 5)
            if p.g >= 3:
                notes = (
                    f"slope bound certifies h0 <= {slope.value} for any stable bundle",
                )
            else:
                notes = (
                    "at genus 2 a stable bundle of degree 5 with h0 = 4 exists; "
                    "its invariants are forced to (2, 1)",
                )
    q = Rank3Query(curve, inv, use_hyperelliptic_sharpening=True)
    bound = h0_rank3_semistable_bound(q)
    return ExampleReport(
        "c",
        curve,
        inv,
        exact,
        bound,
        exact == bound.value,
        params={"variant": p.variant, "k": p.k},
        slope=slope,
        notes=notes,
    )


def stable_pairs_for_degree5_genus2() -> list[tuple[int, int]]:
    """Stable congruence-valid (s1, s2) at genus 2, degree 5 compatible with
    4 sections under the sharpened main bound.  The filter leaves (2, 1)."""
    g, d, target = 2, 5, 4
    curve = Curve(g, hyperelliptic=True)
    out = []
    for s1 in range(1, 3 * g + 1):
        if (s1 - d) % 3 != 0:
            continue
        for s2 in range(1, 3 * g + 1):
            if (s2 - 2 * d) % 3 != 0:
                continue
            if not s1 <= d <= 6 * g - 6 - s2:
                continue
            q = Rank3Query(
                curve,
                BundleInvariants(3, d, (s1, s2)),
                use_hyperelliptic_sharpening=True,
            )
            if h0_rank3_semistable_bound(q).value >= target:
                out.append((s1, s2))
    return out


def unstable_sharpness(c: Curve, dL: int, dF: int, s1F: int) -> ExampleReport:
    """Direct sum of a dominant line bundle of degree dL and a rank-2 sum of
    pencil powers realizing (dF, s1F), with its exact section count against
    the unstable bound.

    dL even gives a pure pencil power; dL odd falls back to a power twisted
    by a general point (only available for (dL-1)/2 <= g-2).
    """
    if not c.hyperelliptic:
        raise ParamsOutOfRange("unstable witnesses live on hyperelliptic curves")
    d = dL + dF
    if 3 * dL <= d:
        raise ParamsOutOfRange("line summand must strictly dominate: need 3*dL > dL+dF")
    if dF % 2 != 0 or s1F % 2 != 0 or s1F > 0 or (dF + s1F) % 4 != 0:
        raise UnrealizableF(
            f"no sum of two pencil powers has degree {dF} and s1 {s1F}"
        )
    a = (dF + s1F) // 4
    b = (dF - s1F) // 4
    if a < 0:
        raise UnrealizableF(f"degree {dF} too small for s1 {s1F}")
    if dL < 2 * b:
        raise ParamsOutOfRange("line summand must dominate both pencil factors")
    g = c.genus
    if dL % 2 == 0:
        h0_line = h0_hyperelliptic_power(c, dL // 2)
        line_desc = f"pencil^{dL // 2}"
    else:
        e = (dL - 1) // 2
        if e > g - 2:
            raise UnrealizableF(
                f"odd degree {dL} needs a general-point twist, only modeled for "
                f"exponent <= g-2 = {g - 2}"
            )
        h0_line = h0_hyperelliptic_power(c, e, extra_general_point=True)
        line_desc = f"pencil^{e}(point)"
    exact = h0_line + h0_hyperelliptic_power(c, a) + h0_hyperelliptic_power(c, b)
    s1 = d - 3 * dL
    s2 = 2 * d - 3 * (dL + 2 * b)
    inv = BundleInvariants(3, d, (s1, s2))
    q = Rank3Query(c, inv, s1f=s1F)
    bound = h0_rank3_unstable_bound(q, f_semistable=(s1F == 0))
    return ExampleReport(
        "unstable",
        c,
        inv,
        exact,
        bound,
        exact == bound.value,
        params={"dL": dL, "dF": dF, "s1F": s1F},
        notes=(f"E = {line_desc} + pencil^{a} + pencil^{b}",),
    )


def suite(max_genus: int) -> list[ExampleReport]:
    """All valid family reports up to the given genus."""
    reports: list[ExampleReport] = []
    for g in range(3, max_genus + 1):
        for n in range((g - 2) // 4 + 1):
            for k in range(g - 2 - (4 * n + 2) // 2 + 1):
                reports.append(family_a(FamilyAParams(g, n, k)))
    for g in range(2, max_genus + 1):
        ms = [1] if g == 2 else list(range(2, g + 1, 2))
        for m in ms:
            reports.append(family_b(FamilyBParams(g, m)))
    for g in range(2, max_genus + 1):
        for variant in ("E1", "E2"):
            for k in range(g - 1):
                reports.append(family_c(FamilyCParams(g, variant, k)))
    return reports
