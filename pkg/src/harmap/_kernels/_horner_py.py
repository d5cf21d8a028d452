"""Numpy fallback for the Horner kernel."""

import numpy as np


def polyval_many(coeffs, z):
    """Evaluate sum_k coeffs[k] * z**k at every point of ``z`` by Horner's rule.

    ``coeffs`` and ``z`` are 1-d contiguous complex128 arrays.  The update is
    acc = acc*z + c, vectorized over points: the same recurrence as the
    compiled kernel, agreeing with it to a unit in the last place.
    """
    acc = np.full(z.shape, coeffs[-1])
    for k in range(len(coeffs) - 2, -1, -1):
        acc *= z
        acc += coeffs[k]
    return acc
