"""The bound engine.

Exact section counts where they are forced (vanishing, zero h^1) and
Clifford-type upper bounds everywhere else: the classical line-bundle bound,
the rank-2 bound with its hyperelliptic and Krawtchouk refinements, the
rank-3 semistable bound in stability-degree form, the rank-3 bound through a
minimal-degree rank-2 quotient, the unstable-rank-3 bounds, and the slope
bound for stable bundles of small slope.

All arithmetic is exact; half-integer quantities are floored once, at the
end of each formula.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CongruenceViolation,
    HypothesisFailed,
    MissingS1F,
    NotSemistable,
    NotUnstable,
    RankUnsupported,
    SlopeOutOfRange,
)
from .invariants import BoundResult, BundleInvariants, Curve, halves, serre_dual, validate
from .krawtchouk import KrawtchoukQuery, delta_vanishes, krawtchouk


@dataclass(frozen=True)
class Rank3Query:
    """A rank-3 bound request.

    ``s1f`` is the first stability degree of a minimal-degree rank-2
    quotient, when the caller knows it.  It must match the parity of the
    quotient degree (2d + s1)/3 and, for semistable input, satisfy
    3*s1f >= 2*s2 - s1.  Refinements are opt-in flags so that every reported
    value is attributable.
    """

    curve: Curve
    inv: BundleInvariants
    s1f: int | None = None
    use_delta: bool = False
    use_hyperelliptic_sharpening: bool = False

    def __post_init__(self):
        validate(self.inv)
        if self.inv.rank != 3:
            raise RankUnsupported("rank-3 query requires rank 3 invariants")
        if self.s1f is not None:
            d = self.inv.degree
            s1, s2 = self.inv.s
            deg_f = (2 * d + s1) // 3
            if (self.s1f - deg_f) % 2 != 0:
                raise CongruenceViolation(
                    1, f"s1f={self.s1f} must have the parity of the quotient degree {deg_f}"
                )
            if self.inv.semistable() and 3 * self.s1f < 2 * s2 - s1:
                raise HypothesisFailed(
                    f"s1f={self.s1f} is below the minimum (2*s2-s1)/3 forced by s2"
                )


def suggested_min_s1f(inv: BundleInvariants) -> int:
    """Smallest admissible s1f: at least (2*s2 - s1)/3, with the parity of
    the minimal quotient degree.  Offered as a hint, never substituted."""
    validate(inv)
    if inv.rank != 3:
        raise RankUnsupported("s1f only makes sense for rank 3")
    d = inv.degree
    s1, s2 = inv.s
    deg_f = (2 * d + s1) // 3
    t = -((-(2 * s2 - s1)) // 3)  # ceil((2*s2 - s1)/3)
    if (t - deg_f) % 2 != 0:
        t += 1
    return t


def h0_line_bound(c: Curve, d: int) -> BoundResult:
    """h^0 of a line bundle of degree d: exact 0 below degree 0, the Clifford
    bound floor(d/2)+1 in the special range, exact d+1-g above 2g-2."""
    g = c.genus
    if d < 0:
        return BoundResult(0, "VANISHING", exact=True)
    if d > 2 * g - 2:
        return BoundResult(d + 1 - g, "RR-EXACT", exact=True)
    return BoundResult(d // 2 + 1, "CLIFFORD-LINE")


def h0_rank2_bound(c: Curve, d: int, s1: int, use_delta: bool = False) -> BoundResult:
    """Upper bound on h^0 of a semistable rank-2 bundle with invariants (d, s1).

    Exact 0 for d < s1 and exact d+2-2g for d > 4g-4-s1; in between the
    bound is (d-s1)/2 + 2, lowered by 1 on a hyperelliptic curve when
    s1 > 0, or to (d-s1)/2 + 1 + delta by the Krawtchouk refinement.
    """
    if (d - s1) % 2 != 0:
        raise CongruenceViolation(1, f"s1={s1} must have the parity of d={d}")
    if s1 < 0:
        raise NotSemistable(f"rank-2 bound needs s1 >= 0, got {s1}")
    g = c.genus
    if d < s1:
        return BoundResult(0, "VANISHING", exact=True)
    if d > 4 * g - 4 - s1:
        return BoundResult(d + 2 - 2 * g, "RR-EXACT", exact=True)
    half = (d - s1) // 2
    best = BoundResult(half + 2, "RANK2-CLIFFORD")
    if c.hyperelliptic and s1 > 0:
        cand = BoundResult(half + 1, "RANK2-HYP", assumptions=("hyperelliptic", "s1>0"))
        if cand.value < best.value:
            best = cand
    if use_delta and s1 <= g:
        delta = 1 if krawtchouk(KrawtchoukQuery(half + 1, g, 2 * g - s1)) == 0 else 0
        cand = BoundResult(
            half + 1 + delta, "RANK2-KRAWTCHOUK", assumptions=("krawtchouk-refinement",)
        )
        if cand.value < best.value:
            best = cand
    return best


def h0_rank3_semistable_bound(q: Rank3Query) -> BoundResult:
    """Upper bound on h^0 of a semistable rank-3 bundle from (d, s1, s2).

    Dispatch, in order: exact vanishing below s1; exact d+3-3g above
    6g-6-s2; the line-only tails where the quotient contributes nothing
    (s2 > 2*s1 with d < s2-s1, and its dual); otherwise the main bound
    floor(d/2 - max(2*s2-s1, 2*s1-s2)/6) + 3, sharpened to +2 on a
    hyperelliptic curve (unless s1 = s2 = 0) or via a nonzero Krawtchouk
    coefficient when s1f is supplied.
    """
    inv = q.inv
    d = inv.degree
    s1, s2 = inv.s
    if s1 < 0 or s2 < 0:
        raise NotSemistable(f"semistable bound needs s1, s2 >= 0, got {inv.s}")
    g = q.curve.genus
    if d < s1:
        return BoundResult(0, "VANISHING", exact=True)
    if d > 6 * g - 6 - s2:
        # the clamp only engages for invariants no bundle can realize
        return BoundResult(max(0, d + 3 - 3 * g), "RR-EXACT", exact=True)
    if s2 > 2 * s1 and d < s2 - s1:
        return BoundResult(halves(d - s1).floor() + 1, "RANK3-LINE-ONLY")
    if 2 * s2 < s1 and d > 6 * g - 6 - (s1 - s2):
        return BoundResult(halves(d - s2).floor() + 1, "RANK3-LINE-ONLY-DUAL")
    skew = max(2 * s2 - s1, 2 * s1 - s2)
    base = (3 * d - skew) // 6 + 3
    if (
        q.use_hyperelliptic_sharpening
        and q.curve.hyperelliptic
        and not (s1 == 0 and s2 == 0)
    ):
        return BoundResult(
            base - 1, "RANK3-MAIN-SHARP", assumptions=("hyperelliptic-sharpening",)
        )
    if q.use_delta and q.s1f is not None and q.s1f <= g:
        idx_num = 2 * d + s1 - 3 * q.s1f
        if idx_num >= 0 and not delta_vanishes(g, d, s1, q.s1f):
            return BoundResult(
                base - 1,
                "RANK3-MAIN-SHARP",
                assumptions=("krawtchouk-nonzero", f"s1f={q.s1f}"),
            )
    return BoundResult(base, "RANK3-MAIN")


def h0_prop21_bound(q: Rank3Query) -> BoundResult:
    """Upper bound on h^0 through a minimal-degree rank-2 quotient with known
    s1f: floor(d/2 - s1f/2) + 3, refined to +2 (+delta) by the hyperelliptic
    or Krawtchouk improvements.

    Requires s1 <= 2*s2 and the degree window
    max(s1, (3*s1f - s1)/2) <= d <= 6g - 6 - (3*s1f + s1)/2.
    """
    if q.s1f is None:
        raise MissingS1F("this bound needs s1f")
    inv = q.inv
    d = inv.degree
    s1, s2 = inv.s
    g = q.curve.genus
    if s1 > 2 * s2:
        raise HypothesisFailed(f"needs s1 <= 2*s2, got s1={s1}, s2={s2}")
    lo2 = max(2 * s1, 3 * q.s1f - s1)  # doubled lower end of the window
    hi2 = 12 * g - 12 - 3 * q.s1f - s1
    if not lo2 <= 2 * d <= hi2:
        raise HypothesisFailed(
            f"degree {d} outside the quotient window [{lo2}/2, {hi2}/2]"
        )
    half = halves(d - q.s1f).floor()
    best = BoundResult(half + 3, "RANK3-QUOTIENT", assumptions=(f"s1f={q.s1f}",))
    if q.use_hyperelliptic_sharpening and q.curve.hyperelliptic and q.s1f > 0:
        cand = BoundResult(
            half + 2,
            "RANK3-QUOTIENT-SHARP",
            assumptions=(f"s1f={q.s1f}", "hyperelliptic", "s1f>0"),
        )
        if cand.value < best.value:
            best = cand
    if q.use_delta and q.s1f <= g:
        delta = 1 if delta_vanishes(g, d, s1, q.s1f) else 0
        cand = BoundResult(
            half + 2 + delta,
            "RANK3-QUOTIENT-KRAWTCHOUK",
            assumptions=(f"s1f={q.s1f}", "krawtchouk-refinement"),
        )
        if cand.value < best.value:
            best = cand
    return best


def h0_rank3_unstable_bound(q: Rank3Query, f_semistable: bool) -> BoundResult:
    """Upper bound on h^0 of a non-semistable rank-3 bundle.

    When s1 >= 0 (so s2 < 0) the computation passes to the twisted dual and
    transfers back through the exact Euler characteristic.  With s1 < 0 the
    bundle is an extension of a rank-2 quotient F by its maximal line
    subbundle; the value is the sum of the piecewise line-bundle bound and
    the piecewise bound for F (three ranges when F is semistable, five when
    it is unstable), each floored.  ``q.s1f`` refers to the bundle actually
    bounded, i.e. the dual when the reduction applies.
    """
    inv = q.inv
    validate(inv)
    d = inv.degree
    s1, s2 = inv.s
    g = q.curve.genus
    if s1 >= 0 and s2 >= 0:
        raise NotUnstable(f"unstable bound needs s1 < 0 or s2 < 0, got {inv.s}")
    if s1 >= 0:
        dual = serre_dual(q.curve, inv)
        sub = h0_rank3_unstable_bound(
            Rank3Query(q.curve, dual, q.s1f, q.use_delta, q.use_hyperelliptic_sharpening),
            f_semistable,
        )
        return BoundResult(
            max(0, sub.value + d + 3 - 3 * g),
            sub.case,
            exact=sub.exact,
            assumptions=sub.assumptions + ("serre-dual-reduction",),
        )
    if q.s1f is None:
        raise MissingS1F("unstable bound needs s1f")
    s1f = q.s1f
    if 3 * s1f < 2 * s2 - s1:
        raise HypothesisFailed(
            f"s1f={s1f} is below the minimum (2*s2-s1)/3 forced by s2"
        )
    if f_semistable and s1f < 0:
        raise HypothesisFailed("a semistable quotient has s1f >= 0")
    if not f_semistable and s1f >= 0:
        raise HypothesisFailed("an unstable quotient has s1f < 0")
    if d < s1:
        return BoundResult(0, "VANISHING", exact=True)
    if d > 6 * g - 6 - s2:
        return BoundResult(max(0, d + 3 - 3 * g), "RR-EXACT", exact=True)

    # line part: subbundle of degree (d - s1)/3
    if d <= 6 * g - 6 + s1:
        h0_l = (d - s1) // 6 + 1
        l_branch = "clifford"
    else:
        h0_l = (d - s1) // 3 + 1 - g
        l_branch = "riemann-roch"

    # quotient part, dispatched on doubled degree thresholds
    if f_semistable:
        case = "UNSTABLE-SS-QUOTIENT"
        if 2 * d < 3 * s1f - s1:
            h0_f, f_branch = 0, "vanishing"
        elif 2 * d <= 12 * g - 12 - 3 * s1f - s1:
            h0_f, f_branch = (d + s1 - s2) // 3 + 2, "clifford"
        else:
            h0_f, f_branch = (2 * d + s1) // 3 + 2 - 2 * g, "riemann-roch"
    else:
        case = "UNSTABLE-UNSTABLE-QUOTIENT"
        if 2 * d < 3 * s1f - s1:
            h0_f, f_branch = 0, "vanishing"
        elif 2 * d < -(3 * s1f + s1):
            h0_f, f_branch = (d + s1 - s2) // 6 + 1, "sub-clifford"
        elif 2 * d <= 12 * g - 12 + 3 * s1f - s1:
            h0_f, f_branch = (2 * d + s1) // 6 + 2, "clifford"
        elif 2 * d <= 12 * g - 12 - 3 * s1f - s1:
            h0_f, f_branch = (6 * d + 4 * s1 - 2 * s2) // 12 - g + 2, "mixed"
        else:
            h0_f, f_branch = (2 * d + s1) // 3 + 2 - 2 * g, "riemann-roch"

    return BoundResult(
        max(0, h0_l + h0_f),
        case,
        assumptions=(f"s1f={s1f}", f"line:{l_branch}", f"quotient:{f_branch}"),
    )


def slope_bound(g: int, d: int) -> BoundResult:
    """For a stable rank-3 bundle of slope below 2: h^0 <= 3 + floor((d-3)/g).

    Stability is the caller's assertion and is recorded as an assumption.
    """
    if g < 2:
        raise ValueError("genus must be >= 2")
    if d >= 6:
        raise SlopeOutOfRange(f"slope bound needs d < 6, got {d}")
    return BoundResult(max(0, 3 + (d - 3) // g), "SLOPE", assumptions=("stable",))
