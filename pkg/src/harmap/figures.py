"""SVG rendering of disk and annulus images under harmonic maps.

Curves are images of concentric circles and radial segments, one ``<path>``
per curve, grouped and colored per band.  Output is deterministic: fixed
emission order (bands outer to inner, circles by increasing radius, rays by
increasing angle), fixed 9-significant-digit formatting, no smoothing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .harmonic import HarmonicMap

__all__ = ["RenderSpec", "Curve", "build_curves", "render", "parse_bands", "DEFAULT_PALETTE"]

DEFAULT_PALETTE = ("blue", "red", "yellow", "green", "purple", "orange")


@dataclass(frozen=True)
class RenderSpec:
    """What to draw: a map, radial bands with colors, and sampling density."""

    map: HarmonicMap
    bands: tuple  # of (r_inner, r_outer, color)
    n_circles: int = 8
    n_rays: int = 24
    samples_per_curve: int = 256
    canvas: tuple = (640, 640)

    def __post_init__(self):
        if not self.bands:
            raise ValueError("at least one band is required")
        for ri, ro, _ in self.bands:
            if not (0.0 <= ri < ro < 1.0):
                raise ValueError(f"band ({ri}, {ro}) must satisfy 0 <= r_inner < r_outer < 1")
        if self.n_rays < 4:
            raise ValueError("n_rays must be at least 4")
        if self.samples_per_curve < 64:
            raise ValueError("samples_per_curve must be at least 64")
        if self.n_circles < 1:
            raise ValueError("n_circles must be at least 1")


@dataclass(frozen=True)
class Curve:
    """One polyline: the image of a circle or ray, with its source parameters."""

    band: int
    kind: str  # "circle" | "ray"
    parameter: float  # circle radius, or ray angle
    points: np.ndarray  # complex vertices


def build_curves(spec: RenderSpec):
    """Exact curve vertices (no formatting): the testable geometry layer."""
    f = spec.map
    s = spec.samples_per_curve
    curves = []
    # emission order: bands outer-to-inner
    order = sorted(range(len(spec.bands)), key=lambda i: -spec.bands[i][1])
    for b in order:
        ri, ro, _ = spec.bands[b]
        for j in range(1, spec.n_circles + 1):
            rho = ri + (ro - ri) * j / spec.n_circles
            zs = rho * np.exp(2j * np.pi * np.arange(s) / s)
            pts = f.eval(zs)
            pts = np.append(pts, pts[0])  # close the loop exactly
            curves.append(Curve(b, "circle", rho, pts))
        for i in range(spec.n_rays):
            theta = 2.0 * np.pi * i / spec.n_rays
            rs = ri + (ro - ri) * np.arange(s) / (s - 1)
            pts = f.eval(rs * np.exp(1j * theta))
            curves.append(Curve(b, "ray", theta, pts))
    return curves


def _fmt(x):
    return f"{x:.9g}"


def render(spec: RenderSpec) -> str:
    """Emit the SVG document for a render spec; byte-identical for equal specs."""
    curves = build_curves(spec)
    allpts = np.concatenate([c.points for c in curves])
    x0, x1 = float(allpts.real.min()), float(allpts.real.max())
    y0, y1 = float(allpts.imag.min()), float(allpts.imag.max())
    margin = 0.05 * max(x1 - x0, y1 - y0)
    # the y axis is flipped by a group transform, so the viewBox lives in
    # flipped coordinates while path data keeps the raw image values
    vx = x0 - margin
    vy = -(y1 + margin)
    vw = (x1 - x0) + 2.0 * margin
    vh = (y1 - y0) + 2.0 * margin
    stroke_w = 0.002 * max(vw, vh)
    w, h = spec.canvas

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(w)}" '
        f'height="{_fmt(h)}" viewBox="{_fmt(vx)} {_fmt(vy)} {_fmt(vw)} {_fmt(vh)}">',
        '<g transform="scale(1 -1)">',
    ]
    current_band = None
    for c in curves:
        if c.band != current_band:
            if current_band is not None:
                lines.append("</g>")
            color = spec.bands[c.band][2]
            lines.append(
                f'<g id="band-{c.band}" fill="none" stroke="{color}" '
                f'stroke-width="{_fmt(stroke_w)}">'
            )
            current_band = c.band
        d = "M " + " L ".join(f"{_fmt(p.real)} {_fmt(p.imag)}" for p in c.points)
        lines.append(f'<path d="{d}"/>')
    lines.append("</g>")
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def parse_bands(text, palette=DEFAULT_PALETTE):
    """Parse "0,0.25;0.25,0.3333" into color-annotated band triples."""
    bands = []
    for k, part in enumerate(text.split(";")):
        ri, ro = (float(tok) for tok in part.split(","))
        bands.append((ri, ro, palette[k % len(palette)]))
    return tuple(bands)
