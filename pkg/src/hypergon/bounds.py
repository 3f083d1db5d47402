"""Closed-form perimeter and area bounds for hyperbolic polygons.

Single-polygon bounds (the polygon has n sides):

    thm1  Peri(tangential, inradius r)    >= 2n atanh(tan(pi/n) sinh r)
    thm2  Peri(cyclic, circumradius R)    <= 2n asinh(sin(pi/n) sinh R)
    thm3  Area(tangential, inradius r)    >= (n-2)pi - 2n acos(sin(pi/n) cosh r)
    thm4  Area(cyclic, circumradius R)    <= (n-2)pi - 2n acot(tan(pi/n) cosh R)

The two cyclic bounds are upper bounds and the two tangential bounds are
lower bounds: a fixed circumcircle contains the polygon while a fixed
incircle is contained in it, so the regular polygon is the maximizer in
the first case and the minimizer in the second.  (The half-angle function
acot(cosh R tan(theta/2)) is strictly convex in theta for R > 0, which
pins thm4's direction; see cyclic_half_angle.)

Totals over k regular polygons whose radii sum to T scale the same
expressions to the equal split T/k (thm5-thm8).  Fixing a total area
(thm9) or a total perimeter (thm10) instead gives

    thm9   sum Peri >= 2nk acosh(cos(pi/n) / sin(((n-2)pi - T/k) / (2n)))
    thm10  sum Area <= k(n-2)pi - 2nk asin(cos(pi/n) / cosh(T / (2nk)))

thm7, thm9 and thm10 are valid only above (or below) a per-polygon
admissibility threshold where the relevant allocation objective keeps a
single convexity sign; thm7's threshold is cosh R = sqrt(2 + cot^2(pi/n)),
the inflection of acot(tan(pi/n) cosh R).  In every case equality holds
exactly at the regular configuration with the quantity split evenly, which
is recorded in the result for independent re-evaluation.

Infeasibility is a flag, never an exception: beyond its guard a bound value
saturates (atanh to +inf, the acos term to 0) so parameter sweeps stay total.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import Infeasible, InvalidTotal
from .hypmath import (
    RegularNGonSpec,
    acos_snapped,
    acosh1p,
    coshm1,
    regular_convert,
    stable_asinh,
    stable_atanh,
    tangential_radius_limit,
)

_SNAP = 1e-14


@dataclass(frozen=True)
class BoundResult:
    """One evaluated bound, with its admissibility data.

    guard_margin is the signed distance from the parameter to the bound's
    admissibility threshold (positive inside), or +inf when the bound has no
    threshold.  equality_spec pins down the configuration attaining the
    bound; pushing it back through regular_convert reproduces value.
    """

    theorem: str
    quantity: str  # "perimeter" | "area" | "inradius"
    kind: str  # "lower" | "upper"
    n: int
    k: int
    param: float
    value: float
    feasible: bool
    guard_margin: float
    equality_spec: RegularNGonSpec | None

    def to_json_dict(self) -> dict:
        eq = None
        if self.equality_spec is not None:
            s = self.equality_spec
            eq = {"n": s.n, "R": s.R, "r": s.r, "theta": s.theta, "side": s.side}
        return {
            "theorem": self.theorem,
            "quantity": self.quantity,
            "kind": self.kind,
            "n": self.n,
            "k": self.k,
            "param": self.param,
            "value": self.value,
            "feasible": self.feasible,
            "guard_margin": self.guard_margin,
            "equality_spec": eq,
        }


def _check_nk(n: int, k: int = 1) -> None:
    if not isinstance(n, int) or n < 3:
        raise Infeasible(f"need integer n >= 3, got {n!r}")
    if not isinstance(k, int) or k < 1:
        raise Infeasible(f"need integer k >= 1, got {k!r}")


def _check_radius(x: float) -> None:
    if not x > 0.0:
        raise Infeasible(f"radius must be positive, got {x!r}")


def area_radius_limit(n: int) -> float:
    """Inradius at which sin(pi/n)*cosh r reaches 1: acosh(1/sin(pi/n))."""
    sn = math.sin(math.pi / n)
    return acosh1p((1.0 - sn) / sn)


def thm9_area_threshold(n: int) -> float:
    """Per-polygon area above which the thm9 objective is certified convex."""
    return (n - 2) * math.pi - 2 * n * math.asin(math.sqrt(1.0 - math.sin(math.pi / n)))


def thm10_peri_threshold(n: int) -> float:
    """Per-polygon perimeter above which the thm10 objective is certified convex."""
    sn = math.sin(math.pi / n)
    # acosh(sqrt(1 + sn)), with the branch-point offset formed cancellation-free
    return 2 * n * acosh1p(sn / (math.sqrt(1.0 + sn) + 1.0))


def thm7_radius_threshold(n: int) -> float:
    """Circumradius at which acot(tan(pi/n) cosh R) inflects: acosh(sqrt(2 + cot^2(pi/n))).

    Below it that half-angle function is concave in R and the equal split
    minimizes total area among regular polygons; above it the sign flips
    and the thm7 inequality can fail, so the threshold is thm7's guard.
    """
    c2 = 1.0 / math.tan(math.pi / n) ** 2
    return acosh1p((1.0 + c2) / (math.sqrt(2.0 + c2) + 1.0))


def _snap_to_one(x: float) -> float:
    if 1.0 - _SNAP <= x <= 1.0 + 1e-12:
        return 1.0
    return x


def _tangential_peri(n: int, k: int, x: float, theorem: str, T: float) -> BoundResult:
    limit = tangential_radius_limit(n)
    arg = math.tan(math.pi / n) * math.sinh(x)
    feasible = x < limit
    value = 2.0 * n * k * stable_atanh(arg) if arg < 1.0 else math.inf
    return BoundResult(
        theorem=theorem,
        quantity="perimeter",
        kind="lower",
        n=n,
        k=k,
        param=T,
        value=value,
        feasible=feasible,
        guard_margin=limit - x,
        equality_spec=RegularNGonSpec(n=n, r=x) if feasible else None,
    )


def _cyclic_peri(n: int, k: int, x: float, theorem: str, T: float, kind: str) -> BoundResult:
    value = 2.0 * n * k * stable_asinh(math.sin(math.pi / n) * math.sinh(x))
    return BoundResult(
        theorem=theorem,
        quantity="perimeter",
        kind=kind,
        n=n,
        k=k,
        param=T,
        value=value,
        feasible=True,
        guard_margin=math.inf,
        equality_spec=RegularNGonSpec(n=n, R=x),
    )


def _tangential_area(n: int, k: int, x: float, theorem: str, T: float) -> BoundResult:
    arg = _snap_to_one(math.sin(math.pi / n) * math.cosh(x))
    feasible = arg <= 1.0
    acos_term = acos_snapped(arg) if feasible else 0.0
    value = k * (n - 2) * math.pi - 2.0 * n * k * acos_term
    return BoundResult(
        theorem=theorem,
        quantity="area",
        kind="lower",
        n=n,
        k=k,
        param=T,
        value=value,
        feasible=feasible,
        guard_margin=area_radius_limit(n) - x,
        equality_spec=RegularNGonSpec(n=n, r=x) if feasible and x < tangential_radius_limit(n) else None,
    )


def _cyclic_area(n: int, k: int, x: float, theorem: str, T: float, kind: str, guarded: bool) -> BoundResult:
    # Angle-deficit form (n-2) pi - 2 n acot(tan(pi/n) cosh x) cancels
    # catastrophically as x -> 0; the atan-difference rewrite below is exact
    # and keeps the quadratic small-x behaviour to full precision.
    t = math.tan(math.pi / n)
    value = 2.0 * n * k * math.atan2(t * coshm1(x), 1.0 + t * t * math.cosh(x))
    if guarded:
        threshold = thm7_radius_threshold(n)
        feasible = x < threshold
        guard_margin = threshold - x
    else:
        feasible = True
        guard_margin = math.inf
    return BoundResult(
        theorem=theorem,
        quantity="area",
        kind=kind,
        n=n,
        k=k,
        param=T,
        value=value,
        feasible=feasible,
        guard_margin=guard_margin,
        equality_spec=RegularNGonSpec(n=n, R=x),
    )


def thm1_peri_lower(n: int, r: float) -> BoundResult:
    """Perimeter of a tangential n-gon with inradius r; feasible iff tan(pi/n) sinh r < 1."""
    _check_nk(n)
    _check_radius(r)
    return _tangential_peri(n, 1, r, "1.1", r)


def thm2_peri_upper(n: int, R: float) -> BoundResult:
    """Perimeter of a cyclic n-gon with circumradius R; always feasible."""
    _check_nk(n)
    _check_radius(R)
    return _cyclic_peri(n, 1, R, "1.2", R, kind="upper")


def thm3_area_lower(n: int, r: float) -> BoundResult:
    """Area of a tangential n-gon with inradius r; feasible iff sin(pi/n) cosh r <= 1."""
    _check_nk(n)
    _check_radius(r)
    return _tangential_area(n, 1, r, "1.3", r)


def thm4_area_upper(n: int, R: float) -> BoundResult:
    """Area of a cyclic n-gon with circumradius R; always feasible.

    This is an upper bound: the half-angle acot(cosh R tan(theta/2)) is
    strictly convex in theta, so the uniform partition minimizes the angle
    sum and the regular polygon has the largest area at a given
    circumradius.  A spread partition like (2.5, 1.5, 1.2, ...) on n=4,
    R=1 already has visibly less area than the regular square.
    """
    _check_nk(n)
    _check_radius(R)
    return _cyclic_area(n, 1, R, "1.4", R, kind="upper", guarded=False)


def thm5_total_peri_lower(n: int, k: int, T: float) -> BoundResult:
    """Total perimeter of k regular cyclic n-gons with circumradii summing to T."""
    _check_nk(n, k)
    _check_radius(T)
    return _cyclic_peri(n, k, T / k, "1.5", T, kind="lower")


def thm6_total_peri_lower(n: int, k: int, T: float) -> BoundResult:
    """Total perimeter of k regular tangential n-gons with inradii summing to T."""
    _check_nk(n, k)
    _check_radius(T)
    return _tangential_peri(n, k, T / k, "1.6", T)


def thm7_total_area_lower(n: int, k: int, T: float) -> BoundResult:
    """Total area of k regular cyclic n-gons with circumradii summing to T.

    Lower bound, asserted only while every circumradius stays below
    thm7_radius_threshold(n): past that inflection the per-polygon area
    stops being convex in R and unequal splits can undercut the bound
    (n=6, k=2, T=6: radii (2, 4) total about 19.2 against a bound of 21.0).
    """
    _check_nk(n, k)
    _check_radius(T)
    return _cyclic_area(n, k, T / k, "1.7", T, kind="lower", guarded=True)


def thm8_total_area_lower(n: int, k: int, T: float) -> BoundResult:
    """Total area of k regular tangential n-gons with inradii summing to T."""
    _check_nk(n, k)
    _check_radius(T)
    return _tangential_area(n, k, T / k, "1.8", T)


def thm9_total_peri_lower(n: int, k: int, T: float) -> BoundResult:
    """Total perimeter of k n-gons with areas summing to T.

    The bound is the perimeter of k regular n-gons of area T/k each; it is
    asserted only when every polygon's area clears thm9_area_threshold(n).
    """
    _check_nk(n, k)
    if not 0.0 < T < k * (n - 2) * math.pi:
        raise InvalidTotal(f"total area must lie in (0, {k}*({n}-2)*pi), got {T!r}")
    theta = ((n - 2) * math.pi - T / k) / n
    half = 0.5 * theta
    gap = 0.5 * math.pi - math.pi / n - half
    t = 2.0 * math.sin(math.pi / n + 0.5 * gap) * math.sin(0.5 * gap) / math.sin(half)
    value = 2.0 * n * k * acosh1p(t)
    threshold = thm9_area_threshold(n)
    return BoundResult(
        theorem="1.9",
        quantity="perimeter",
        kind="lower",
        n=n,
        k=k,
        param=T,
        value=value,
        feasible=T / k > threshold,
        guard_margin=T / k - threshold,
        equality_spec=RegularNGonSpec(n=n, theta=theta),
    )


def thm10_total_area_upper(n: int, k: int, T: float) -> BoundResult:
    """Total area of k n-gons with perimeters summing to T.

    The bound is the area of k regular n-gons of perimeter T/k each,
    asserted only above thm10_peri_threshold(n) per polygon.  The cosh in
    the denominator is forced by the substitution theta = 2 asin(cos(pi/n)
    / cosh(x / (2n))) from perimeter x back to interior angle: a circular
    cosine of a length is not meaningful there.
    """
    _check_nk(n, k)
    if not T > 0.0:
        raise InvalidTotal(f"total perimeter must be positive, got {T!r}")
    value = k * (n - 2) * math.pi - 2.0 * n * k * math.asin(math.cos(math.pi / n) / math.cosh(T / (2.0 * n * k)))
    threshold = thm10_peri_threshold(n)
    return BoundResult(
        theorem="1.10",
        quantity="area",
        kind="upper",
        n=n,
        k=k,
        param=T,
        value=value,
        feasible=T / k > threshold,
        guard_margin=T / k - threshold,
        equality_spec=RegularNGonSpec(n=n, side=T / (n * k)),
    )


def reference_r_from_R(n: int, R: float) -> float:
    """Inradius of the regular cyclic n-gon: tanh r = cos(pi/n) tanh R."""
    _check_nk(n)
    _check_radius(R)
    return stable_atanh(math.cos(math.pi / n) * math.tanh(R))


def cor1_inradius_lower(n: int, R: float) -> BoundResult:
    """The printed inradius-from-circumradius expression, evaluated verbatim.

    value = asinh(tan(pi/n) / tan(2n asinh(sin(pi/n) sinh R))).  The tan is
    applied to a perimeter-sized argument, so the expression disagrees with
    reference_r_from_R; it is reported for audit, never asserted, and the
    divergence is tabulated by the report command.  Feasible only when the
    inner tan is positive.
    """
    _check_nk(n)
    _check_radius(R)
    inner = 2.0 * n * stable_asinh(math.sin(math.pi / n) * math.sinh(R))
    tv = math.tan(inner)
    value = stable_asinh(math.tan(math.pi / n) / tv) if tv != 0.0 else math.inf
    return BoundResult(
        theorem="cor1",
        quantity="inradius",
        kind="lower",
        n=n,
        k=1,
        param=R,
        value=value,
        feasible=tv > 0.0,
        guard_margin=math.inf,
        equality_spec=None,
    )


def equality_value(res: BoundResult) -> float:
    """Re-evaluate a bound's equality configuration through regular_convert.

    Returns k times the relevant metric of the recorded regular polygon;
    for a correct bound this reproduces res.value.
    """
    if res.equality_spec is None:
        raise Infeasible(f"{res.theorem} at param {res.param!r} has no equality configuration")
    m = regular_convert(res.equality_spec)
    metric = m.perimeter if res.quantity == "perimeter" else m.area
    return res.k * metric


# Registry used by the CLI and the verification driver.  param tells what the
# swept argument means; multi marks the fixed-total family.
THEOREMS: dict[str, dict] = {
    "1.1": {"func": thm1_peri_lower, "param": "r", "multi": False},
    "1.2": {"func": thm2_peri_upper, "param": "R", "multi": False},
    "1.3": {"func": thm3_area_lower, "param": "r", "multi": False},
    "1.4": {"func": thm4_area_upper, "param": "R", "multi": False},
    "1.5": {"func": thm5_total_peri_lower, "param": "total_circumradius", "multi": True},
    "1.6": {"func": thm6_total_peri_lower, "param": "total_inradius", "multi": True},
    "1.7": {"func": thm7_total_area_lower, "param": "total_circumradius", "multi": True},
    "1.8": {"func": thm8_total_area_lower, "param": "total_inradius", "multi": True},
    "1.9": {"func": thm9_total_peri_lower, "param": "total_area", "multi": True},
    "1.10": {"func": thm10_total_area_upper, "param": "total_perimeter", "multi": True},
    "cor1": {"func": cor1_inradius_lower, "param": "R", "multi": False},
}
