"""Truncated complex power series.

A :class:`PowerSeries` stores coefficients ``c[0..N]`` of ``sum c_k z^k`` as a
dense complex128 array that is frozen after construction.  All arithmetic is
pure and truncation-aware: binary operations truncate to the shorter operand,
and callers pad explicitly (``pad``) when a longer result is wanted.  NaN and
infinity are rejected at every constructor, since nearly every consumer of a
series is a min-reduction that a single NaN would poison.
"""

from __future__ import annotations

from numbers import Number

import numpy as np

from . import _kernels
from .errors import DivisorVanishesAtOrigin

__all__ = ["PowerSeries", "rational_expand", "geometric_section"]


def _freeze(arr):
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("coefficients must form a nonempty 1-d sequence")
    if not np.all(np.isfinite(arr)):
        raise ValueError("non-finite coefficient rejected")
    arr.setflags(write=False)
    return arr


class PowerSeries:
    """Coefficients of a polynomial / truncated Taylor series in z."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = _freeze(np.array(coeffs, dtype=np.complex128))

    @classmethod
    def zeros(cls, degree):
        return cls(np.zeros(degree + 1))

    @classmethod
    def identity(cls, degree):
        """The series of z itself, padded to the given degree."""
        c = np.zeros(degree + 1, dtype=np.complex128)
        c[1] = 1.0
        return cls(c)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __repr__(self):
        return f"PowerSeries(degree={self.degree})"

    # -- evaluation ---------------------------------------------------------

    def eval(self, z):
        """Horner evaluation at a complex point or array of points."""
        zs = np.asarray(z, dtype=np.complex128)
        flat = np.ascontiguousarray(zs.reshape(-1))
        out = _kernels.polyval_many(self.coeffs, flat)
        if zs.ndim == 0:
            return complex(out[0])
        return out.reshape(zs.shape)

    def __call__(self, z):
        return self.eval(z)

    # -- calculus -----------------------------------------------------------

    def derivative(self):
        """Formal derivative; degree drops by one (degree 0 gives the zero series)."""
        if self.degree == 0:
            return PowerSeries.zeros(0)
        k = np.arange(1, self.degree + 1)
        return PowerSeries(k * self.coeffs[1:])

    def antiderivative(self):
        """Formal antiderivative with value 0 at the origin; degree rises by one."""
        k = np.arange(1, self.degree + 2)
        out = np.zeros(self.degree + 2, dtype=np.complex128)
        out[1:] = self.coeffs / k
        return PowerSeries(out)

    # -- arithmetic (all truncate to the shorter operand) --------------------

    def _common(self, other):
        n = min(self.degree, other.degree)
        return n, self.coeffs[: n + 1], other.coeffs[: n + 1]

    def __add__(self, other):
        _, a, b = self._common(other)
        return PowerSeries(a + b)

    def __sub__(self, other):
        _, a, b = self._common(other)
        return PowerSeries(a - b)

    def __mul__(self, other):
        if isinstance(other, Number):
            return PowerSeries(self.coeffs * complex(other))
        return self.mul(other)

    __rmul__ = __mul__

    def __neg__(self):
        return PowerSeries(-self.coeffs)

    def mul(self, other):
        """Cauchy product truncated to min(N_a, N_b).

        Operands are ordered by a fixed key first, so mul(a, b) and mul(b, a)
        run the identical summation and agree exactly.
        """
        n, a, b = self._common(other)
        if b.tobytes() < a.tobytes():
            a, b = b, a
        return PowerSeries(np.convolve(a, b)[: n + 1])

    def div(self, other):
        """Long division q with mul(q, other) == self through the common degree."""
        n, a, b = self._common(other)
        if b[0] == 0:
            raise DivisorVanishesAtOrigin("divisor has zero constant term")
        q = np.zeros(n + 1, dtype=np.complex128)
        for k in range(n + 1):
            acc = a[k]
            if k:
                acc = acc - np.dot(b[1 : k + 1], q[k - 1 :: -1])
            q[k] = acc / b[0]
        return PowerSeries(q)

    def __truediv__(self, other):
        return self.div(other)

    def hadamard(self, other):
        """Coefficientwise product, truncated to the shorter operand."""
        _, a, b = self._common(other)
        return PowerSeries(a * b)

    # -- reshaping ----------------------------------------------------------

    def pad(self, degree):
        """Zero-extend to the given degree (no-op if already at least that long)."""
        if degree <= self.degree:
            return self
        out = np.zeros(degree + 1, dtype=np.complex128)
        out[: self.degree + 1] = self.coeffs
        return PowerSeries(out)

    def truncate(self, degree):
        """Drop coefficients above the given degree (pads if shorter)."""
        if degree >= self.degree:
            return self.pad(degree)
        return PowerSeries(self.coeffs[: degree + 1])


def rational_expand(num_coeffs, den_coeffs, degree):
    """Taylor expansion of num/den to the given degree.

    Both arguments are polynomial coefficient sequences (constant term first);
    the denominator must not vanish at the origin.
    """
    num = PowerSeries(num_coeffs).pad(degree).truncate(degree)
    den = PowerSeries(den_coeffs).pad(degree).truncate(degree)
    return num.div(den)


def geometric_section(n, degree=None):
    """z + z^2 + ... + z^n, optionally zero-padded to a larger degree."""
    c = np.zeros((degree if degree is not None else n) + 1, dtype=np.complex128)
    c[1 : n + 1] = 1.0
    return PowerSeries(c)
