"""Planar harmonic mappings f = h + conj(g) built from two power series.

The antianalytic part is stored as an analytic series; conjugation is applied
only at evaluation time.  That keeps every algebraic operation (sections,
slices, convolution, shears) inside one analytic-series kernel and makes the
coefficientwise convolution of the two parts a plain Hadamard product.

Normalization follows the standard class H: h(0) = 0, h'(0) = 1, g(0) = 0.
Maps with g'(0) = 0 additionally belong to the subclass H0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .errors import (
    CriticalPoint,
    DegenerateDilatation,
    NonUnimodularParameter,
    SectionBeyondTruncation,
    UnknownCatalogName,
)
from .series import PowerSeries

__all__ = [
    "HarmonicMap",
    "ShearSpec",
    "CatalogEntry",
    "shear",
    "catalog",
    "catalog_entry",
    "catalog_names",
    "example1_map",
    "map_to_spec",
    "map_from_spec",
    "series_to_literal",
    "series_from_literal",
]

CRITICAL_TOL = 1e-14  # |h'| below this is treated as a critical point
_NORM_TOL = 1e-9


class HarmonicMap:
    """A sense-preserving-candidate harmonic map f = h + conj(g)."""

    __slots__ = ("h", "g")

    def __init__(self, h: PowerSeries, g: PowerSeries):
        n = max(h.degree, g.degree)
        h = h.pad(n)
        g = g.pad(n)
        if abs(h.coeffs[0]) > _NORM_TOL or abs(g.coeffs[0]) > _NORM_TOL:
            raise ValueError("normalization requires h(0) = g(0) = 0")
        if abs(h.coeffs[1] - 1.0) > _NORM_TOL:
            raise ValueError("normalization requires h'(0) = 1")
        self.h = h
        self.g = g

    @property
    def degree(self):
        return self.h.degree

    @property
    def is_h0(self):
        """True when g'(0) = 0, i.e. the map lies in the subclass H0."""
        return abs(self.g.coeffs[1]) <= 1e-12

    def __repr__(self):
        cls = "H0" if self.is_h0 else "H"
        return f"HarmonicMap(degree={self.degree}, class={cls})"

    # -- evaluation and first-order data -------------------------------------

    def eval(self, z):
        """f(z) = h(z) + conj(g(z))."""
        return self.h.eval(z) + np.conjugate(self.g.eval(z))

    def __call__(self, z):
        return self.eval(z)

    def dilatation_values(self, zs):
        """Vectorized g'/h' with a mask of critical points (|h'| < 1e-14)."""
        hp = self.h.derivative().eval(zs)
        gp = self.g.derivative().eval(zs)
        critical = np.abs(hp) < CRITICAL_TOL
        safe = np.where(critical, 1.0, hp)
        w = gp / safe
        return np.where(critical, np.nan + 0j, w), critical

    def dilatation(self, z):
        """Second complex dilatation g'(z)/h'(z)."""
        hp = self.h.derivative().eval(z)
        if abs(hp) < CRITICAL_TOL:
            raise CriticalPoint(f"|h'({z})| < {CRITICAL_TOL}")
        return self.g.derivative().eval(z) / hp

    def jacobian(self, z):
        """J_f = |h'|^2 - |g'|^2; positive exactly on the sense-preserving set."""
        hp = self.h.derivative().eval(z)
        gp = self.g.derivative().eval(z)
        return abs(hp) ** 2 - abs(gp) ** 2

    # -- structural operations ------------------------------------------------

    def section(self, p, q):
        """Joint partial sum: h kept through degree p, g through degree q."""
        if p < 1 or q < 2:
            raise ValueError("sections require p >= 1 and q >= 2")
        if p > self.h.degree or q > self.g.degree:
            raise SectionBeyondTruncation(
                f"section ({p},{q}) of a map stored to degree {self.degree}"
            )
        n = max(p, q)
        hc = np.array(self.h.coeffs[: n + 1])
        gc = np.array(self.g.coeffs[: n + 1])
        hc[p + 1 :] = 0.0
        gc[q + 1 :] = 0.0
        return HarmonicMap(PowerSeries(hc), PowerSeries(gc))

    def slice(self, lam):
        """Analytic slice h + lam*g for a unimodular parameter lam."""
        lam = complex(lam)
        if abs(abs(lam) - 1.0) > 1e-12:
            raise NonUnimodularParameter(f"|lam| = {abs(lam)!r}")
        return PowerSeries(self.h.coeffs + lam * self.g.coeffs)

    def convolve(self, other: "HarmonicMap") -> "HarmonicMap":
        """Harmonic convolution: Hadamard product on each part separately.

        Parts of unequal truncation degree are cut to the shorter one.
        """
        return HarmonicMap(self.h.hadamard(other.h), self.g.hadamard(other.g))


# -- shear construction -------------------------------------------------------


@dataclass(frozen=True)
class ShearSpec:
    """Input to the shear construction.

    ``target`` is the analytic map l the shear must reproduce (h+g = l in
    ``sum`` mode, h-g = l in ``diff`` mode) and ``dilatation`` is the series
    of omega with g' = omega*h'.
    """

    target: PowerSeries
    dilatation: PowerSeries
    mode: str = "sum"

    def __post_init__(self):
        if self.mode not in ("sum", "diff"):
            raise ValueError("mode must be 'sum' or 'diff'")
        if abs(self.dilatation.coeffs[0]) >= 1.0:
            raise ValueError("|omega(0)| must be < 1")
        if (
            self.target.degree < 1
            or abs(self.target.coeffs[0]) > _NORM_TOL
            or abs(self.target.coeffs[1] - 1.0) > _NORM_TOL
        ):
            raise ValueError("target must satisfy l(0) = 0, l'(0) = 1")


def shear(spec: ShearSpec) -> HarmonicMap:
    """Solve h +/- g = l, g' = omega*h' for (h, g) with h(0) = g(0) = 0."""
    sign = 1.0 if spec.mode == "sum" else -1.0
    omega0 = complex(spec.dilatation.coeffs[0])
    if abs(1.0 + sign * omega0) < CRITICAL_TOL:
        raise DegenerateDilatation("1 +/- omega(0) is numerically zero")
    if omega0 != 0:
        # h'(0) = 1/(1 +/- omega(0)) would break the h'(0)=1 normalization
        raise ValueError("shear requires a dilatation vanishing at the origin")
    n = spec.target.degree
    lp = spec.target.derivative()
    denom = sign * spec.dilatation.pad(n - 1).truncate(n - 1).coeffs.copy()
    denom[0] += 1.0
    hp = lp.div(PowerSeries(denom))
    h = hp.antiderivative()  # constant fixed by h(0) = 0
    if spec.mode == "sum":
        g = spec.target - h
    else:
        g = h - spec.target
    return HarmonicMap(h, g)


# -- named catalog -------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    map: HarmonicMap
    provenance: str


def _half_plane(n):
    # vertical shear of z/(1-z) with dilatation -z; coefficients (k+1)/2, -(k-1)/2
    k = np.arange(n + 1, dtype=np.float64)
    h = (k + 1.0) / 2.0
    g = -(k - 1.0) / 2.0
    h[0] = 0.0
    g[0] = 0.0
    g[1] = 0.0
    return HarmonicMap(PowerSeries(h), PowerSeries(g))


def _harmonic_koebe(n):
    # shear of z/(1-z)^2 with dilatation z
    k = np.arange(n + 1, dtype=np.float64)
    h = (2.0 * k * k + 3.0 * k + 1.0) / 6.0
    g = (2.0 * k * k - 3.0 * k + 1.0) / 6.0
    h[0] = 0.0
    g[0] = 0.0
    g[1] = 0.0
    return HarmonicMap(PowerSeries(h), PowerSeries(g))


def _sixgon(n):
    # lacunary hexagon map: h carries z^(6m+1)/(6m+1), g carries -z^(6m-1)/(6m-1)
    h = np.zeros(n + 1)
    g = np.zeros(n + 1)
    for k in range(1, n + 1):
        if k % 6 == 1:
            h[k] = 1.0 / k
        elif k % 6 == 5:
            g[k] = -1.0 / k
    return HarmonicMap(PowerSeries(h), PowerSeries(g))


def example1_map(a, beta, degree=64):
    """z + a*(1-beta)*conj(z)^2, stored with g-coefficient conj(a)*(1-beta)."""
    h = PowerSeries.identity(degree)
    g = np.zeros(degree + 1, dtype=np.complex128)
    g[2] = np.conjugate(complex(a)) * (1.0 - beta)
    return HarmonicMap(h, PowerSeries(g))


def _pzhalf(n):
    g = np.zeros(n + 1)
    g[2] = 0.5
    return HarmonicMap(PowerSeries.identity(n), PowerSeries(g))


_CATALOG = {
    "f0": (
        _half_plane,
        "right half-plane map Re w > -1/2: vertical shear of z/(1-z) with "
        "dilatation -z (Clunie-Sheil-Small shear construction)",
    ),
    "koebe_harmonic": (
        _harmonic_koebe,
        "harmonic Koebe map: shear of z/(1-z)^2 with dilatation z",
    ),
    "sixgon": (
        _sixgon,
        "regular hexagon map: lacunary series with dilatation -z^4",
    ),
    "example1": (
        lambda n, a=1.0, beta=0.0: example1_map(a, beta, n),
        "quadratic antianalytic perturbation z + a*(1-beta)*conj(z)^2",
    ),
    "pzhalf": (
        lambda n: _pzhalf(n),
        "z + conj(z)^2/2: close-to-convex but not convex",
    ),
}

_EXAMPLE1_RE = re.compile(r"^example1\(\s*([^,()]+)\s*,\s*([^,()]+)\s*\)$")


def catalog_names():
    return sorted(_CATALOG)


def catalog(name, degree=64) -> HarmonicMap:
    """Look up a named map, truncated at the given degree.

    ``example1`` accepts inline parameters, e.g. ``example1(0.8, 0)``; the
    bare name uses a = 1, beta = 0.
    """
    return catalog_entry(name, degree).map


def catalog_entry(name, degree=64) -> CatalogEntry:
    m = _EXAMPLE1_RE.match(name.strip())
    if m:
        try:
            a, beta = float(m.group(1)), float(m.group(2))
        except ValueError:
            raise UnknownCatalogName(name) from None
        builder, prov = _CATALOG["example1"]
        return CatalogEntry(name, builder(degree, a, beta), prov)
    key = name.strip()
    if key not in _CATALOG:
        raise UnknownCatalogName(name)
    builder, prov = _CATALOG[key]
    return CatalogEntry(key, builder(degree), prov)


# -- map-spec JSON format -------------------------------------------------------


def series_to_literal(s: PowerSeries):
    """JSON series literal: list of [re, im] pairs, index = power of z."""
    return [[float(c.real), float(c.imag)] for c in s.coeffs]


def series_from_literal(lit):
    return PowerSeries([complex(re_, im_) for re_, im_ in lit])


def map_to_spec(f: HarmonicMap):
    return {
        "h": series_to_literal(f.h),
        "g": series_to_literal(f.g),
        "class": "H0" if f.is_h0 else "H",
    }


def map_from_spec(d) -> HarmonicMap:
    f = HarmonicMap(series_from_literal(d["h"]), series_from_literal(d["g"]))
    claimed = d.get("class", "H")
    if claimed == "H0" and not f.is_h0:
        raise ValueError("map claims class H0 but g'(0) != 0")
    return f
