"""Hot evaluation kernels with a compiled core and a pure-numpy fallback.

The only primitive is batch Horner evaluation of a complex-coefficient
polynomial; everything else in the package is a thin array combination of
its outputs.  At import time the Cython extension is preferred when present;
``HARMAP_KERNEL`` forces a backend:

    HARMAP_KERNEL=python    always use the numpy fallback
    HARMAP_KERNEL=compiled  require the extension (ImportError if missing)
    HARMAP_KERNEL=auto      default behavior

Both backends run the same per-point Horner recurrence; results agree to a
unit in the last place (numpy's batched complex multiply may fuse operations,
the compiled kernel never does).  Within one installed backend, results are
deterministic run to run.
"""

import os

_choice = os.environ.get("HARMAP_KERNEL", "auto").lower()
if _choice not in ("auto", "python", "compiled"):
    raise ValueError(f"HARMAP_KERNEL must be auto|python|compiled, got {_choice!r}")

_impl = None
if _choice in ("auto", "compiled"):
    try:
        from . import _horner_c as _impl
        BACKEND = "compiled"
    except ImportError:
        if _choice == "compiled":
            raise
if _impl is None:
    from . import _horner_py as _impl

    BACKEND = "python"

polyval_many = _impl.polyval_many
