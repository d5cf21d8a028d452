"""Pointwise and on-circle inequality evaluators.

Every criterion here is an open condition whose sign certifies a geometric
property: class margins for the derivative-dominated and value-dominated
harmonic classes, the fully-convex functional Re(D^2 f / Df), the
Royster-Ziegler directional-convexity functional, probes and closed-form
bounds for direction-convexity-preserving (DCP) sections, the convolution
close-to-convexity margin, and a collision search that hunts for concrete
non-univalence witnesses.

Scalar calls raise the documented typed errors at singular points; array
calls mark singular points with NaN so that circle scans can count them.
Grid scans report evidence, not proofs: the defining inequalities live on an
open disk that no finite grid exhausts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateDenominator, NonUnimodularParameter
from .harmonic import HarmonicMap
from .series import PowerSeries

__all__ = [
    "SamplingConfig",
    "CriterionReport",
    "DcpProbe",
    "circle_points",
    "ph0_margin",
    "gh0_margin",
    "convex_criterion",
    "convex_criterion_values",
    "s22_convexity_gap",
    "s22_convexity_gap_direct",
    "royster_ziegler_min",
    "default_direction_probes",
    "dcp_test_series",
    "dcp_probe_pass",
    "dcp_bound_a",
    "dcp_bound_b",
    "rz_bound_diag",
    "convolution_margin",
    "convolution_margin_min",
    "collision_search",
]

DENOM_TOL = 1e-13  # |z h' - conj(z g')| below this counts as singular


def _default_radii():
    # 64 radii reaching 0.99, the outermost radius any membership scan uses
    return tuple(float(r) for r in 0.99 * np.arange(1, 65) / 64.0)


@dataclass(frozen=True)
class SamplingConfig:
    """Grid resolution for every circle/disk scan and parameter sweep."""

    n_theta: int = 4096
    radii: tuple = field(default_factory=_default_radii)
    lambda_sweep: int = 64
    seed: int = 0

    def __post_init__(self):
        if self.n_theta < 8:
            raise ValueError("n_theta must be at least 8")
        if self.lambda_sweep < 1:
            raise ValueError("lambda_sweep must be at least 1")
        if not all(0.0 < r < 1.0 for r in self.radii):
            raise ValueError("all radii must lie in (0, 1)")

    def unimodular(self):
        """The sweep of unit-modulus parameters exp(2*pi*i*k/lambda_sweep)."""
        return np.exp(2j * np.pi * np.arange(self.lambda_sweep) / self.lambda_sweep)


@dataclass(frozen=True)
class CriterionReport:
    """Outcome of one criterion minimized over one circle."""

    criterion: str
    r: float
    min_value: float
    argmin: complex
    passed: bool
    singular_count: int

    def to_json_dict(self):
        return {
            "criterion": self.criterion,
            "r": self.r,
            "min": self.min_value,
            "argmin": [self.argmin.real, self.argmin.imag],
            "pass": self.passed,
            "singular": self.singular_count,
        }


@dataclass(frozen=True)
class DcpProbe:
    """Parameters (t, mu, nu) of one directional-convexity probe."""

    t: float
    mu: float
    nu: float

    def __post_init__(self):
        if not (0.0 <= self.mu < 2.0 * np.pi):
            raise ValueError("mu must lie in [0, 2*pi)")
        if not (0.0 <= self.nu <= np.pi):
            raise ValueError("nu must lie in [0, pi]")


def circle_points(r, n_theta):
    """n_theta equispaced points on |z| = r, starting at angle 0."""
    return r * np.exp(2j * np.pi * np.arange(n_theta) / n_theta)


def _pointwise(z, compute):
    """Run an array computation; unwrap scalars, leaving NaN handling to callers."""
    zs = np.asarray(z, dtype=np.complex128)
    vals = compute(zs.reshape(-1) if zs.ndim else zs.reshape(1))
    return vals.reshape(zs.shape) if zs.ndim else vals[0]


# -- class membership margins ---------------------------------------------------


def ph0_margin(f: HarmonicMap, alpha, z):
    """Margin Re(h'(z)) - alpha - |g'(z)| of the derivative-dominance class.

    Positive on the whole disk exactly when f lies in the class with
    parameter alpha.
    """
    def compute(zs):
        hp = f.h.derivative().eval(zs)
        gp = f.g.derivative().eval(zs)
        return hp.real - alpha - np.abs(gp)

    return _pointwise(z, compute)


def gh0_margin(f: HarmonicMap, beta, z):
    """Margin Re(h(z)/z) - beta - |g(z)/z|; at z = 0 the limit 1 - beta."""
    def compute(zs):
        at0 = zs == 0
        safe = np.where(at0, 1.0, zs)
        hv = f.h.eval(zs) / safe
        gv = f.g.eval(zs) / safe
        vals = hv.real - beta - np.abs(gv)
        return np.where(at0, 1.0 - beta, vals)

    return _pointwise(z, compute)


# -- fully-convex functional ------------------------------------------------------


def convex_criterion_values(f: HarmonicMap, zs):
    """Re(D^2 f / Df) on an array of points; NaN where the denominator degenerates.

    Df = z f_z - conj(z) f_zbar; positivity of this functional on circles,
    together with sense-preservation, certifies convexity of subdisk images.
    """
    hp = f.h.derivative()
    gp = f.g.derivative()
    hpp = hp.derivative()
    gpp = gp.derivative()
    num = zs * (hp.eval(zs) + zs * hpp.eval(zs)) + np.conjugate(
        zs * (gp.eval(zs) + zs * gpp.eval(zs))
    )
    den = zs * hp.eval(zs) - np.conjugate(zs * gp.eval(zs))
    bad = np.abs(den) < DENOM_TOL
    vals = (num / np.where(bad, 1.0, den)).real
    return np.where(bad, np.nan, vals)


def convex_criterion(f: HarmonicMap, z):
    """Scalar Re(D^2 f / Df); raises DegenerateDenominator at singular points."""
    zs = np.asarray(z, dtype=np.complex128)
    if zs.ndim:
        return convex_criterion_values(f, zs)
    val = convex_criterion_values(f, zs.reshape(1))[0]
    if math.isnan(val):
        raise DegenerateDenominator(f"|Df| < {DENOM_TOL} at z = {z}")
    return float(val)


def s22_convexity_gap(r, theta):
    """Closed form -4r^2*(1 + 16r^2 + 4r*cos(theta)*(3 - cos(theta)^2)).

    Negativity of this gap on 0 < |z| < rho certifies |w| < 1 for the
    Moebius-type ratio w entering the degree-2 joint section of the
    half-plane map, hence convexity of that section on subdisks.
    """
    r = np.asarray(r, dtype=np.float64)
    c = np.cos(np.asarray(theta, dtype=np.float64))
    return -4.0 * r * r * (1.0 + 16.0 * r * r + 4.0 * r * c * (3.0 - c * c))


def s22_convexity_gap_direct(z):
    """The same gap from its definition |3z^2 - 3zbar^2|^2 - |2z + 9z^2 - zbar^2|^2."""
    z = np.asarray(z, dtype=np.complex128)
    zb = np.conjugate(z)
    a = 3.0 * z * z - 3.0 * zb * zb
    b = 2.0 * z + 9.0 * z * z - zb * zb
    return np.abs(a) ** 2 - np.abs(b) ** 2


# -- Royster-Ziegler directional convexity ----------------------------------------


def _rz_kernel(zs, mu, nu):
    emu = np.exp(-1j * mu)
    return -1j * np.exp(1j * mu) * (1.0 - 2.0 * zs * emu * np.cos(nu) + zs * zs * emu * emu)


def royster_ziegler_min(phi: PowerSeries, probe: DcpProbe, r, cfg: SamplingConfig):
    """Minimum of Re{F_{mu,nu}(z) phi'(z)} over the grid on |z| = r.

    Nonnegativity of the functional on the disk is the Royster-Ziegler
    certificate that phi maps univalently onto a domain convex in the
    imaginary direction; the report passes when the grid minimum is >= 0.
    """
    zs = circle_points(r, cfg.n_theta)
    vals = (_rz_kernel(zs, probe.mu, probe.nu) * phi.derivative().eval(zs)).real
    k = int(np.argmin(vals))  # ties resolve to the smallest theta index
    mv = float(vals[k])
    return CriterionReport(
        criterion="royster-ziegler",
        r=float(r),
        min_value=mv,
        argmin=complex(zs[k]),
        passed=bool(mv >= 0.0),
        singular_count=0,
    )


_PROBE_GRID_MU = 32
_PROBE_GRID_NU = 17


def default_direction_probes():
    """Witness candidates: the three axis/diagonal pairs first, then a uniform grid."""
    cands = [(0.0, 0.0), (np.pi, np.pi), (np.pi / 2, np.pi / 2)]
    for i in range(_PROBE_GRID_MU):
        for j in range(_PROBE_GRID_NU):
            cands.append((2.0 * np.pi * i / _PROBE_GRID_MU, np.pi * j / (_PROBE_GRID_NU - 1)))
    return cands


def dcp_test_series(gser: PowerSeries, t) -> PowerSeries:
    """The test function g + i*t*z*g' whose directional convexity for every
    real t characterizes membership in the DCP class; coefficientwise
    g_n * (1 + i*t*n)."""
    n = np.arange(gser.degree + 1)
    return PowerSeries(gser.coeffs * (1.0 + 1j * t * n))


def dcp_probe_pass(gser: PowerSeries, t, r, cfg: SamplingConfig, candidates=None):
    """First witnessing (mu, nu) whose Royster-Ziegler scan passes, if any.

    Returns (True, (mu, nu)) or (False, None).  Absence of a witness on the
    candidate grid is grid-relative evidence of failure, not a proof.
    """
    phi = dcp_test_series(gser, t)
    for mu, nu in candidates if candidates is not None else default_direction_probes():
        rep = royster_ziegler_min(phi, DcpProbe(t, mu, nu), r, cfg)
        if rep.passed:
            return True, (mu, nu)
    return False, None


def dcp_bound_a(n, t):
    """Closed-form lower bound for the (mu, nu) = (0, 0) probe minimum on |z| = 1/4."""
    return t / 3.0 - (5.0 * t * n * n + (8.0 * t + 5.0) * n + 4.0 * t / 3.0 + 4.0) / 4.0 ** (n + 1)


def dcp_bound_b(n, t):
    """Closed-form lower bound for the (mu, nu) = (pi/2, pi/2) probe minimum on |z| = 1/4."""
    at = abs(t)
    return (
        3.0 / 5.0
        - 18.0 * at / 9.0
        - (5.0 / 3.0)
        * (5.0 * at * n * n + (8.0 * at + 5.0) * n + 4.0 + 4.0 * at / 3.0)
        / 4.0 ** (n + 1)
    )


def rz_bound_diag(n, t, r):
    """General-radius lower bound for the diagonal probe (mu = nu = pi/2).

    Triangle-inequality estimate of Re{(1 - z^2) phi'(z)} on |z| = r for the
    degree-n geometric section's test function; at n = 3, r = 0.201254 it
    evaluates to 0.608489 - 1.60093*|t|.
    """
    at = abs(t)
    rpow = r ** np.arange(1, n + 1)
    geom = float(rpow.sum())
    lead = (1.0 - r) / (1.0 + r) - 2.0 * at * r / (1.0 - r) ** 2
    tail = ((1.0 + r) / (1.0 - r)) * (n * r ** (n + 1) + (n + 1) * r**n)
    mix = at * ((1.0 + r) / (1.0 - r)) * ((n + 1) ** 2 * r**n + n * n * r ** (n + 1) + 2.0 * geom)
    return lead - tail - mix


# -- convolution close-to-convexity margin -----------------------------------------


def convolution_margin(f1: HarmonicMap, f2: HarmonicMap, eps, z, gamma):
    """Margin Re(H_eps'(z)) - gamma for the slice H_eps = h1*h2 + eps*(g1*g2).

    The products are coefficientwise; positivity of the margin for every
    unimodular eps makes the harmonic convolution close-to-convex with
    derivative-class parameter gamma.
    """
    eps = complex(eps)
    if abs(abs(eps) - 1.0) > 1e-12:
        raise NonUnimodularParameter(f"|eps| = {abs(eps)!r}")
    hp = f1.h.hadamard(f2.h).derivative()
    gp = f1.g.hadamard(f2.g).derivative()

    def compute(zs):
        return (hp.eval(zs) + eps * gp.eval(zs)).real - gamma

    return _pointwise(z, compute)


def convolution_margin_min(f1, f2, gamma, cfg: SamplingConfig, n_theta=None):
    """Minimum of the convolution margin over the eps sweep and the (r, theta) grid."""
    hp = f1.h.hadamard(f2.h).derivative()
    gp = f1.g.hadamard(f2.g).derivative()
    nt = cfg.n_theta if n_theta is None else n_theta
    best = math.inf
    arg = (complex(1.0), complex(0.0))
    for r in cfg.radii:
        zs = circle_points(r, nt)
        a = hp.eval(zs).real
        b = gp.eval(zs)
        for eps in cfg.unimodular():
            vals = a + (eps * b).real - gamma
            k = int(np.argmin(vals))
            if vals[k] < best:
                best = float(vals[k])
                arg = (complex(eps), complex(zs[k]))
    return best, arg


# -- collision search ----------------------------------------------------------------


_CELL = 1e-3  # image-space bucket size
_SEP_MIN = 1e-2  # domain separation floor for candidate pairs
_REFINE_ITERS = 50
_MAX_CANDIDATES = 200
_COLLISION_TOL = 1e-10


def collision_search(f: HarmonicMap, cfg: SamplingConfig, r_max):
    """Hunt for z1 != z2 with |f(z1) - f(z2)| <= 1e-10 inside |z| <= r_max.

    Seeded random points are bucketed by image on a 1e-3 grid; well-separated
    pairs landing in neighboring buckets are refined by a step-halving local
    search on the pair.  Returns the first refined pair, or None.  An empty
    result is evidence, not proof, of injectivity at this resolution.
    """
    if not r_max < 1.0:
        raise ValueError("r_max must be < 1")
    rng = np.random.default_rng(cfg.seed)
    n = max(4096, 8 * cfg.n_theta)
    z = r_max * np.sqrt(rng.random(n)) * np.exp(2j * np.pi * rng.random(n))
    w = f.eval(z)
    cx = np.floor(w.real / _CELL).astype(np.int64)
    cy = np.floor(w.imag / _CELL).astype(np.int64)
    buckets = {}
    for i in range(n):
        buckets.setdefault((cx[i], cy[i]), []).append(i)
    cands = []
    for i in range(n):
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for j in buckets.get((cx[i] + dx, cy[i] + dy), ()):
                    if j <= i or abs(z[i] - z[j]) < _SEP_MIN:
                        continue
                    d = abs(w[i] - w[j])
                    if d <= 2.0 * _CELL:
                        cands.append((d, i, j))
    cands.sort(key=lambda item: item[0])
    for _, i, j in cands[:_MAX_CANDIDATES]:
        refined = _refine_pair(f, z[i], z[j], r_max)
        if refined is not None:
            return refined
    return None


def _refine_pair(f, z1, z2, r_max):
    """Step-halving pattern search on (z1, z2) minimizing the image distance.

    Moves each endpoint along +-1 and +-i; keeps |z| <= r_max and the pair
    at least 1e-6 apart so a locally injective map cannot fake a collision.
    """
    best = abs(f.eval(z1) - f.eval(z2))
    step = _SEP_MIN
    for _ in range(_REFINE_ITERS):
        improved = False
        for d1, d2 in (
            (step, 0),
            (-step, 0),
            (1j * step, 0),
            (-1j * step, 0),
            (0, step),
            (0, -step),
            (0, 1j * step),
            (0, -1j * step),
        ):
            t1, t2 = z1 + d1, z2 + d2
            if abs(t1) > r_max or abs(t2) > r_max or abs(t1 - t2) < 1e-6:
                continue
            d = abs(f.eval(t1) - f.eval(t2))
            if d < best:
                best, z1, z2, improved = d, t1, t2, True
        if not improved:
            step *= 0.5
        if best <= 0.5 * _COLLISION_TOL:
            break
    if best <= _COLLISION_TOL:
        return z1, z2
    return None
