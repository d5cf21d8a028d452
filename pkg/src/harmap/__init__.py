"""harmap: planar harmonic mappings as truncated complex power series.

Core objects: :class:`~harmap.series.PowerSeries` (dense truncated series with
Cauchy/Hadamard products and long division) and
:class:`~harmap.harmonic.HarmonicMap` (pairs f = h + conj(g) with sections,
slices, dilatation, convolution and the shear construction), plus circle-scan
criteria, bisection radius searches, and an SVG renderer for disk images.
"""

from . import _kernels
from .errors import (
    BadBracket,
    CriticalPoint,
    DegenerateDenominator,
    DegenerateDilatation,
    DivisorVanishesAtOrigin,
    HarmapError,
    NonUnimodularParameter,
    SectionBeyondTruncation,
    UnknownCatalogName,
)
from .harmonic import CatalogEntry, HarmonicMap, ShearSpec, catalog, example1_map, shear
from .series import PowerSeries, geometric_section, rational_expand

KERNEL_BACKEND = _kernels.BACKEND

__version__ = "0.1.0"

__all__ = [
    "PowerSeries",
    "rational_expand",
    "geometric_section",
    "HarmonicMap",
    "ShearSpec",
    "CatalogEntry",
    "shear",
    "catalog",
    "example1_map",
    "KERNEL_BACKEND",
    "HarmapError",
    "DivisorVanishesAtOrigin",
    "SectionBeyondTruncation",
    "NonUnimodularParameter",
    "CriticalPoint",
    "DegenerateDilatation",
    "DegenerateDenominator",
    "UnknownCatalogName",
    "BadBracket",
]
