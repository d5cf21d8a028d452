"""The reproduction suite: every headline numerical claim as a named check.

Each check computes an observed value, compares against its expected value at
a fixed tolerance, and reports pass/fail; ``run_suite`` aggregates them into
a JSON-serializable report that is byte-stable across runs except for the
wall-time fields.
"""

from __future__ import annotations

import json
import time

import numpy as np

from .criteria import (
    SamplingConfig,
    circle_points,
    convex_criterion_values,
    collision_search,
    convolution_margin_min,
    dcp_bound_a,
    dcp_test_series,
    gh0_margin,
    ph0_margin,
    royster_ziegler_min,
    rz_bound_diag,
    s22_convexity_gap,
    s22_convexity_gap_direct,
    DcpProbe,
)
from .harmonic import HarmonicMap, catalog, example1_map
from .radii import DEFAULT_T_GRID, convexity_radius, dcp_radius
from .series import PowerSeries, geometric_section

__all__ = ["run_suite", "report_to_json", "SUITE_VERSION", "check_ids", "sample_class_pairs"]

SUITE_VERSION = "1.0"


# -- sampled class members for the convolution-margin checks ---------------------


def _p_class_member(kind, alpha, degree=8):
    """Closed-form members of the derivative-dominance class with parameter alpha."""
    c = 1.0 - alpha
    h = np.zeros(degree + 1, dtype=np.complex128)
    g = np.zeros(degree + 1, dtype=np.complex128)
    h[1] = 1.0
    if kind == "pzhalf":
        g[2] = 0.5
    elif kind == "quad":
        h[2] = c / 4.0
        g[2] = c / 4.0
    elif kind == "cube":
        h[3] = c / 6.0
        g[3] = -c / 6.0
    else:
        raise ValueError(kind)
    return HarmonicMap(PowerSeries(h), PowerSeries(g))


def _g_class_member(kind, beta, degree=8):
    """Closed-form members of the value-dominance class with parameter beta."""
    c = 1.0 - beta
    h = np.zeros(degree + 1, dtype=np.complex128)
    g = np.zeros(degree + 1, dtype=np.complex128)
    h[1] = 1.0
    if kind == "example1":
        g[2] = c
    elif kind == "quad":
        h[2] = c / 2.0
        g[3] = c / 4.0
    elif kind == "mixed":
        h[2] = 0.2
        g[2] = 0.2
    else:
        raise ValueError(kind)
    return HarmonicMap(PowerSeries(h), PowerSeries(g))


def sample_class_pairs():
    """Five (f1, alpha, f2, beta) samples with gamma = 1 - 2(1-alpha)(1-beta) >= 0."""
    return [
        (_p_class_member("pzhalf", 0.0), 0.0, _g_class_member("example1", 0.5), 0.5),
        (_p_class_member("quad", 0.5), 0.5, _g_class_member("quad", 0.0), 0.0),
        (_p_class_member("cube", 0.0), 0.0, _g_class_member("example1", 0.5), 0.5),
        (_p_class_member("quad", 0.5), 0.5, _g_class_member("mixed", 0.5), 0.5),
        (_p_class_member("quad", 0.6), 0.6, _g_class_member("quad", 0.4), 0.4),
    ]


def _membership_min(f, param, margin_fn, cfg):
    worst = np.inf
    for r in cfg.radii:
        zs = circle_points(r, cfg.n_theta)
        worst = min(worst, float(np.min(margin_fn(f, param, zs))))
    return worst


# -- individual checks -------------------------------------------------------------

_Z33 = 0.25 * np.exp(2j * np.pi / 3.0)


def _check_f33(cfg):
    s33 = catalog("f0", 64).section(3, 3)
    observed = float(convex_criterion_values(s33, np.array([_Z33]))[0])
    expected = -47.0 / 97.0
    return expected, observed, 1e-9, abs(observed - expected) <= 1e-9


def _check_dil22_point(cfg):
    s22 = catalog("f0", 64).section(2, 2)
    observed = abs(s22.dilatation(-0.25))
    return 1.0, observed, 1e-12, abs(observed - 1.0) <= 1e-12


def _check_dil22_circle(cfg):
    s22 = catalog("f0", 64).section(2, 2)
    w, critical = s22.dilatation_values(circle_points(0.2499, cfg.n_theta))
    observed = float(np.max(np.abs(w)))
    passed = not np.any(critical) and observed < 1.0
    return 1.0, observed, 0.0, passed


def _convexity_lo(n, cfg, tol=1e-4):
    est = convexity_radius(catalog("f0", 64).section(n, n), cfg, tol)
    return est.lo


def _check_rad(n, window, cfg):
    lo = _convexity_lo(n, cfg)
    low, high = window
    return 0.5 * (low + high), lo, 0.5 * (high - low), low <= lo <= high


def _check_rad_floor(n, floor, cfg):
    lo = _convexity_lo(n, cfg)
    return floor, lo, 0.0, lo >= floor


def _check_gap_grid(cfg):
    r = 0.3 * np.arange(1, 101) / 100.0
    theta = 2.0 * np.pi * np.arange(100) / 100.0
    rr, tt = np.meshgrid(r, theta)
    zz = rr * np.exp(1j * tt)
    observed = float(np.max(np.abs(s22_convexity_gap(rr, tt) - s22_convexity_gap_direct(zz))))
    return 0.0, observed, 1e-12, observed <= 1e-12


def _check_gap_pi(cfg):
    r = 0.99 * np.arange(1, 51) / 50.0
    closed = s22_convexity_gap(r, np.pi)
    sharp = -4.0 * r * r * (4.0 * r - 1.0) ** 2
    observed = float(np.max(np.abs(closed - sharp)))
    return 0.0, observed, 1e-12, observed <= 1e-12


def _check_dcp_min_n4(cfg):
    phi = dcp_test_series(geometric_section(4), 2.0 / 19.0)
    rep = royster_ziegler_min(phi, DcpProbe(2.0 / 19.0, 0.0, 0.0), 0.25, cfg)
    bound = dcp_bound_a(4, 2.0 / 19.0)
    return bound, rep.min_value, 1e-9, rep.min_value >= bound - 1e-9


def _check_dcp_min_n3(t, cfg):
    phi = dcp_test_series(geometric_section(3), t)
    rep = royster_ziegler_min(phi, DcpProbe(t, np.pi / 2.0, np.pi / 2.0), 0.201254, cfg)
    bound = 0.608489 - 1.60093 * abs(t)
    return bound, rep.min_value, 1e-6, rep.min_value >= bound - 1e-6


def _check_dcp_rad(n, floor, cfg):
    est = dcp_radius(geometric_section(n), DEFAULT_T_GRID, cfg)
    return floor, est.lo, 0.0, est.lo >= floor


def _convolved_sixgon(degree=192):
    return catalog("f0", degree).convolve(catalog("sixgon", degree))


def _check_conv_dil_match(cfg):
    c = _convolved_sixgon()
    rng = np.random.default_rng(cfg.seed)
    zs = 0.8 * np.sqrt(rng.random(50)) * np.exp(2j * np.pi * rng.random(50))
    hp = c.h.derivative().eval(zs)
    gp = c.g.derivative().eval(zs)
    closed = zs**4 * (2.0 + zs**6) / (1.0 + 2.0 * zs**6)
    observed = float(np.max(np.abs(gp / hp - closed)))
    return 0.0, observed, 1e-9, observed <= 1e-9


def _check_conv_dil_exceed(cfg):
    c = _convolved_sixgon()
    observed = abs(c.dilatation(0.9 * np.exp(1j * np.pi / 6.0)))
    return 1.0, observed, 0.0, observed > 1.0


def _check_conv_margin(k, cfg):
    f1, alpha, f2, beta = sample_class_pairs()[k]
    gamma = 1.0 - 2.0 * (1.0 - alpha) * (1.0 - beta)
    m1 = _membership_min(f1, alpha, ph0_margin, cfg)
    m2 = _membership_min(f2, beta, gh0_margin, cfg)
    margin, _ = convolution_margin_min(f1, f2, gamma, cfg, n_theta=256)
    passed = m1 > 0.0 and m2 > 0.0 and margin > -1e-9
    return 0.0, margin, 1e-9, passed


def _check_collision(a, beta, expect_found, cfg):
    f = example1_map(a, beta, 4)
    found = collision_search(f, cfg, 0.95)
    if expect_found:
        observed = 1.0 if found is not None else 0.0
        passed = found is not None
        if found is not None:
            z1, z2 = found
            passed = passed and abs(f.eval(z1) - f.eval(z2)) <= 1e-10 and abs(z1 - z2) >= 1e-6
    else:
        observed = 0.0 if found is None else 1.0
        passed = found is None
    return float(expect_found), observed, 0.0, passed


def _check_collision_exact(cfg):
    f = example1_map(0.8, 0.0, 4)
    observed = abs(f.eval(0.625 + 0.2j) - f.eval(0.625 - 0.2j))
    return 0.0, observed, 1e-10, observed <= 1e-10


def _check_shear_f0(cfg):
    from .harmonic import ShearSpec, shear
    from .series import rational_expand

    target = rational_expand([0, 1], [1, -1], 64)
    omega = PowerSeries([0, -1]).pad(64)
    f = shear(ShearSpec(target, omega, "sum"))
    n = np.arange(65, dtype=np.float64)
    ha = (n + 1.0) / 2.0
    ha[0] = 0.0
    ga = -(n - 1.0) / 2.0
    ga[0] = 0.0
    ga[1] = 0.0
    observed = float(
        max(np.max(np.abs(f.h.coeffs - ha)), np.max(np.abs(f.g.coeffs - ga)))
    )
    return 0.0, observed, 1e-12, observed <= 1e-12


def _koebe_slice_formula(lam, n):
    return (2.0 * n * n * (1.0 + lam) + 3.0 * n * (1.0 - lam) + (1.0 + lam)) / 6.0


def _check_koebe_slice(cfg):
    K = catalog("koebe_harmonic", 64)
    n = np.arange(2, 31)
    observed = 0.0
    for lam in (1.0, 1j, -1.0):
        coeffs = K.slice(lam).coeffs[2:31]
        observed = max(observed, float(np.max(np.abs(coeffs - _koebe_slice_formula(lam, n)))))
    return 0.0, observed, 1e-12, observed <= 1e-12


def _check_koebe_growth(cfg):
    K = catalog("koebe_harmonic", 64)
    n = np.arange(2, 31)
    coeffs = np.abs(K.slice(1.0).coeffs[2:31])
    observed = float(np.min(coeffs - n))
    return 0.0, observed, 0.0, observed > 0.0


def _check_origin_limit(cfg):
    names = ["f0", "koebe_harmonic", "sixgon", "example1", "pzhalf"]
    zs = 1e-3 * np.exp(2j * np.pi * np.arange(64) / 64.0)
    observed = 0.0
    for name in names:
        f = catalog(name, 64)
        vals = convex_criterion_values(f, zs)
        observed = max(observed, float(np.max(np.abs(vals - 1.0))))
    return 0.0, observed, 1e-2, observed <= 1e-2


def _doubled(cfg):
    return SamplingConfig(
        n_theta=2 * cfg.n_theta, radii=cfg.radii, lambda_sweep=cfg.lambda_sweep, seed=cfg.seed
    )


def _check_grid_rad(n, cfg):
    lo1 = _convexity_lo(n, cfg)
    lo2 = _convexity_lo(n, _doubled(cfg))
    observed = abs(lo1 - lo2)
    return 0.0, observed, 1e-3, observed <= 1e-3


def _check_grid_dcp(n, cfg):
    lo1 = dcp_radius(geometric_section(n), DEFAULT_T_GRID, cfg).lo
    lo2 = dcp_radius(geometric_section(n), DEFAULT_T_GRID, _doubled(cfg)).lo
    observed = abs(lo1 - lo2)
    return 0.0, observed, 1e-3, observed <= 1e-3


_CHECKS = [
    (
        "F33",
        "convexity functional of the (3,3)-section of the half-plane map at (1/4)e^{2i pi/3} equals -47/97",
        _check_f33,
    ),
    (
        "DIL22-POINT",
        "dilatation of the (2,2)-section of the half-plane map reaches modulus 1 at z = -1/4",
        _check_dil22_point,
    ),
    (
        "DIL22-CIRCLE",
        "dilatation modulus of the (2,2)-section stays below 1 on |z| = 0.2499",
        _check_dil22_circle,
    ),
    ("RAD-S22", "full-convexity radius of the (2,2)-section lies in [0.2498, 0.2502]", lambda cfg: _check_rad(2, (0.2498, 0.2502), cfg)),
    ("RAD-S33", "full-convexity radius of the (3,3)-section lies in [0.2002, 0.2022]", lambda cfg: _check_rad(3, (0.2002, 0.2022), cfg)),
    ("RAD-S44", "full-convexity radius of the (4,4)-section is at least 0.2498", lambda cfg: _check_rad_floor(4, 0.2498, cfg)),
    ("RAD-S55", "full-convexity radius of the (5,5)-section is at least 0.2498", lambda cfg: _check_rad_floor(5, 0.2498, cfg)),
    ("GAP-GRID", "closed-form convexity gap matches its |.|^2 definition on a 100x100 grid", _check_gap_grid),
    ("GAP-PI", "convexity gap at theta = pi equals -4r^2(4r-1)^2", _check_gap_pi),
    (
        "DCP-MIN-N4",
        "axis-probe grid minimum for the degree-4 section at r = 1/4, t = 2/19 dominates its closed-form bound 0",
        _check_dcp_min_n4,
    ),
    ("DCP-MIN-N3-T0", "diagonal-probe grid minimum for the degree-3 section at r = 0.201254, t = 0", lambda cfg: _check_dcp_min_n3(0.0, cfg)),
    ("DCP-MIN-N3-TP", "diagonal-probe grid minimum for the degree-3 section at r = 0.201254, t = +0.105712", lambda cfg: _check_dcp_min_n3(0.105712, cfg)),
    ("DCP-MIN-N3-TN", "diagonal-probe grid minimum for the degree-3 section at r = 0.201254, t = -0.105712", lambda cfg: _check_dcp_min_n3(-0.105712, cfg)),
    ("DCP-RAD-S2", "direction-convexity radius of z+z^2 is at least 0.2490", lambda cfg: _check_dcp_rad(2, 0.2490, cfg)),
    ("DCP-RAD-S3", "direction-convexity radius of z+z^2+z^3 is at least 0.2002", lambda cfg: _check_dcp_rad(3, 0.2002, cfg)),
    ("DCP-RAD-S4", "direction-convexity radius of the degree-4 geometric section is at least 0.2490", lambda cfg: _check_dcp_rad(4, 0.2490, cfg)),
    (
        "CONV-DIL-MATCH",
        "dilatation of the half-plane/hexagon convolution matches z^4(2+z^6)/(1+2z^6) at 50 random points",
        _check_conv_dil_match,
    ),
    (
        "CONV-DIL-EXCEED",
        "that dilatation exceeds modulus 1 at 0.9 e^{i pi/6}, so the convolution is not locally univalent",
        _check_conv_dil_exceed,
    ),
    ("CONV-MARGIN-1", "convolution margin positive for sampled class pair 1 (gamma = 0)", lambda cfg: _check_conv_margin(0, cfg)),
    ("CONV-MARGIN-2", "convolution margin positive for sampled class pair 2 (gamma = 0)", lambda cfg: _check_conv_margin(1, cfg)),
    ("CONV-MARGIN-3", "convolution margin positive for sampled class pair 3 (gamma = 0)", lambda cfg: _check_conv_margin(2, cfg)),
    ("CONV-MARGIN-4", "convolution margin positive for sampled class pair 4 (gamma = 1/2)", lambda cfg: _check_conv_margin(3, cfg)),
    ("CONV-MARGIN-5", "convolution margin positive for sampled class pair 5 (gamma = 0.52)", lambda cfg: _check_conv_margin(4, cfg)),
    ("COLL-A08", "collision found for the quadratic perturbation with a = 0.8, beta = 0", lambda cfg: _check_collision(0.8, 0.0, True, cfg)),
    ("COLL-A12-B05", "collision found for a = 1.2, beta = 0.5", lambda cfg: _check_collision(1.2, 0.5, True, cfg)),
    ("COLL-A04", "no collision found for a = 0.4, beta = 0", lambda cfg: _check_collision(0.4, 0.0, False, cfg)),
    ("COLL-A045", "no collision found for a = 0.45, beta = 0", lambda cfg: _check_collision(0.45, 0.0, False, cfg)),
    ("COLL-EXACT", "the analytic collision pair 0.625 +/- 0.2i maps to equal values", _check_collision_exact),
    ("SHEAR-F0", "shear of z/(1-z) with dilatation -z reproduces the half-plane coefficients", _check_shear_f0),
    ("KOEBE-SLICE", "harmonic Koebe slices match the closed-form coefficients for |lam| = 1", _check_koebe_slice),
    ("KOEBE-GROWTH", "harmonic Koebe slice at lam = 1 has coefficients exceeding n", _check_koebe_growth),
    ("ORIGIN-LIMIT", "convexity functional tends to 1 at the origin for every catalog map", _check_origin_limit),
    ("GRID-RAD-S22", "doubling the angular grid moves the (2,2) radius by at most 1e-3", lambda cfg: _check_grid_rad(2, cfg)),
    ("GRID-RAD-S33", "doubling the angular grid moves the (3,3) radius by at most 1e-3", lambda cfg: _check_grid_rad(3, cfg)),
    ("GRID-RAD-S44", "doubling the angular grid moves the (4,4) radius by at most 1e-3", lambda cfg: _check_grid_rad(4, cfg)),
    ("GRID-RAD-S55", "doubling the angular grid moves the (5,5) radius by at most 1e-3", lambda cfg: _check_grid_rad(5, cfg)),
    ("GRID-DCP-S2", "doubling the angular grid moves the degree-2 DCP radius by at most 1e-3", lambda cfg: _check_grid_dcp(2, cfg)),
    ("GRID-DCP-S3", "doubling the angular grid moves the degree-3 DCP radius by at most 1e-3", lambda cfg: _check_grid_dcp(3, cfg)),
    ("GRID-DCP-S4", "doubling the angular grid moves the degree-4 DCP radius by at most 1e-3", lambda cfg: _check_grid_dcp(4, cfg)),
]


def check_ids():
    return [cid for cid, _, _ in _CHECKS]


def run_suite(cfg: SamplingConfig | None = None, only: str | None = None):
    """Run the suite (optionally filtered to ids starting with ``only``)."""
    if cfg is None:
        cfg = SamplingConfig()
    checks = []
    overall = True
    for cid, desc, fn in _CHECKS:
        if only and not cid.startswith(only):
            continue
        t0 = time.perf_counter()
        expected, observed, tolerance, passed = fn(cfg)
        dt = time.perf_counter() - t0
        overall = overall and bool(passed)
        checks.append(
            {
                "id": cid,
                "description": desc,
                "expected": float(expected),
                "observed": float(observed),
                "tolerance": float(tolerance),
                "pass": bool(passed),
                "wall_time": dt,
            }
        )
    if not checks:
        raise ValueError(f"no checks match {only!r}")
    return {
        "suite_version": SUITE_VERSION,
        "n_theta": cfg.n_theta,
        "seed": cfg.seed,
        "checks": checks,
        "pass": overall,
    }


def report_to_json(report):
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
