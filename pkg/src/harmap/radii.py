"""Radius searches: turn pointwise criteria into bracketed radius estimates.

Each search bisects a pass/fail predicate in the radius, maintaining the
invariant that the returned bracket passes at ``lo`` and fails at ``hi``.
When a predicate still passes at the top of the search range (hi0 = 0.999)
the estimate is returned with ``saturated=True`` and means "at least hi0".
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .criteria import CriterionReport, SamplingConfig, circle_points, convex_criterion_values, dcp_probe_pass
from .errors import BadBracket
from .harmonic import HarmonicMap
from .series import PowerSeries

__all__ = [
    "RadiusEstimate",
    "circle_min",
    "radius_bisect",
    "local_univalence_radius",
    "convexity_radius",
    "dcp_radius",
    "DEFAULT_T_GRID",
    "SUBGRID_CIRCLES",
]

LO0 = 1e-3
HI0 = 0.999
MAX_ITER = 60
SUBGRID_CIRCLES = 16

# covers the probe-case boundaries +-2/19 and the degree-3 boundary +-0.105712
DEFAULT_T_GRID = (
    -1.0,
    -0.5,
    -2.0 / 19.0,
    -0.105712,
    -0.05,
    0.0,
    0.05,
    0.105712,
    2.0 / 19.0,
    0.5,
    1.0,
)


@dataclass(frozen=True)
class RadiusEstimate:
    """Bracketed radius: the criterion passes on |z| = lo and fails on |z| = hi."""

    lo: float
    hi: float
    tol: float
    criterion_id: str
    evaluations: int
    saturated: bool = False

    def to_json_dict(self):
        return {
            "criterion": self.criterion_id,
            "lo": self.lo,
            "hi": self.hi,
            "tol": self.tol,
            "evals": self.evaluations,
        }


def circle_min(criterion, r, cfg: SamplingConfig, criterion_id="criterion"):
    """Minimize a vectorized criterion over the theta grid on |z| = r.

    ``criterion`` maps an array of points to real values with NaN at singular
    points; ties go to the smallest theta index, NaNs count as singular and
    fail the report.
    """
    zs = circle_points(r, cfg.n_theta)
    vals = np.asarray(criterion(zs), dtype=np.float64)
    singular = int(np.count_nonzero(np.isnan(vals)))
    masked = np.where(np.isnan(vals), np.inf, vals)
    k = int(np.argmin(masked))
    mv = float(masked[k])
    return CriterionReport(
        criterion=criterion_id,
        r=float(r),
        min_value=mv,
        argmin=complex(zs[k]),
        passed=bool(singular == 0 and mv > 0.0),
        singular_count=singular,
    )


def radius_bisect(pass_at, lo0, hi0, tol, criterion_id="criterion", _pre_evals=0):
    """Bisection on a monotone pass/fail predicate over the radius.

    Requires pass_at(lo0) and not pass_at(hi0); the final bracket is
    re-verified before returning.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    evals = _pre_evals
    evals += 1
    if not pass_at(lo0):
        raise BadBracket(f"criterion already fails at lo0 = {lo0}")
    evals += 1
    if pass_at(hi0):
        raise BadBracket(f"criterion still passes at hi0 = {hi0}")
    lo, hi = float(lo0), float(hi0)
    for _ in range(MAX_ITER):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        evals += 1
        if pass_at(mid):
            lo = mid
        else:
            hi = mid
    evals += 2
    if not pass_at(lo) or pass_at(hi):
        raise BadBracket("bracket lost during bisection (non-monotone criterion)")
    return RadiusEstimate(lo, hi, float(tol), criterion_id, evals)


def _bracketed_search(pred, tol, criterion_id, lo0=LO0, hi0=HI0):
    """Common wrapper: BadBracket below, saturated estimate above, else bisect."""
    if not pred(lo0):
        raise BadBracket(f"{criterion_id}: already failing at r = {lo0}")
    if pred(hi0):
        return RadiusEstimate(hi0, 1.0, float(tol), criterion_id, 2, saturated=True)
    return radius_bisect(pred, lo0, hi0, tol, criterion_id, _pre_evals=2)


def max_dilatation_on_circle(f: HarmonicMap, r, cfg: SamplingConfig):
    """Max of |g'/h'| over the theta grid; +inf when a critical point is hit."""
    w, critical = f.dilatation_values(circle_points(r, cfg.n_theta))
    if np.any(critical):
        return math.inf
    return float(np.max(np.abs(w)))


def _sense_preserving_at(f, r, cfg):
    # scan a subgrid of circles, not just |z| = r: once h' has a zero inside
    # the disk the dilatation is no longer analytic there and the circle max
    # alone can dip back below 1 (e.g. a Moebius dilatation whose pole the
    # larger circles enclose)
    for k in range(1, SUBGRID_CIRCLES + 1):
        if max_dilatation_on_circle(f, r * k / SUBGRID_CIRCLES, cfg) >= 1.0:
            return False
    return True


def local_univalence_radius(f: HarmonicMap, cfg: SamplingConfig, tol=1e-4):
    """Bisection on |dilatation| < 1 over circle subgrids of (0, r] (critical points fail)."""
    pred = lambda r: _sense_preserving_at(f, r, cfg)
    return _bracketed_search(pred, tol, "local-univalence")


def _fully_convex_at(f, r, cfg):
    # sense-preservation plus positivity of the convexity functional on a
    # subgrid of circles; the functional certifies convexity only where the
    # map is sense-preserving, and scanning inner circles avoids assuming
    # radial monotonicity of the criterion
    for k in range(1, SUBGRID_CIRCLES + 1):
        rho = r * k / SUBGRID_CIRCLES
        if max_dilatation_on_circle(f, rho, cfg) >= 1.0:
            return False
        rep = circle_min(lambda zs: convex_criterion_values(f, zs), rho, cfg)
        if not rep.passed:
            return False
    return True


def convexity_radius(f: HarmonicMap, cfg: SamplingConfig, tol=1e-4):
    """Radius of full convexity: every subdisk image convex, by circle scans."""
    pred = lambda r: _fully_convex_at(f, r, cfg)
    return _bracketed_search(pred, tol, "full-convexity")


def dcp_radius(gser: PowerSeries, t_grid=DEFAULT_T_GRID, cfg: SamplingConfig = None, tol=1e-4):
    """Radius through which every t in the grid admits a directional witness.

    The DCP class quantifies over all real t; a finite grid under-approximates
    that constraint set, so the result is an upper-evidence radius for the
    grid actually used.
    """
    if not t_grid:
        raise ValueError("t_grid must be nonempty")
    ts = sorted(t_grid)
    if any(abs(a + b) > 1e-12 for a, b in zip(ts, reversed(ts))):
        raise ValueError("t_grid must be symmetric about 0")
    if cfg is None:
        cfg = SamplingConfig()
    pred = lambda r: all(dcp_probe_pass(gser, t, r, cfg)[0] for t in t_grid)
    return _bracketed_search(pred, tol, "dcp")
