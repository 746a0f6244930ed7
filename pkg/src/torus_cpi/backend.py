"""Backend selection for the hot numeric kernels.

The environment variable ``TORUS_CPI_BACKEND`` picks the implementation:

* ``auto`` (default) - numba when importable, else pure numpy
* ``numba``          - require the jit kernels, raise if unavailable
* ``numpy``          - force the pure-numpy fallbacks

``benchmarks/bench_backends.py`` times the two sets against each other.
"""

import os

from . import _impl_numpy

_CHOICE = os.environ.get("TORUS_CPI_BACKEND", "auto").strip().lower()

if _CHOICE not in ("auto", "numba", "numpy"):
    raise RuntimeError(
        "TORUS_CPI_BACKEND must be one of auto|numba|numpy, got %r" % _CHOICE
    )

_impl = _impl_numpy
BACKEND = "numpy"

if _CHOICE in ("auto", "numba"):
    try:
        from . import _impl_numba

        _impl = _impl_numba
        BACKEND = "numba"
    except ImportError:
        if _CHOICE == "numba":
            raise RuntimeError(
                "TORUS_CPI_BACKEND=numba but numba is not importable"
            )

cantor_map = _impl.cantor_map
cantor_integral = _impl.cantor_integral
trig_eval = _impl.trig_eval
real_oscillation = _impl.real_oscillation
complex_oscillation_scan = _impl.complex_oscillation_scan
piecewise_eval = _impl.piecewise_eval


def backend_name():
    """Name of the active kernel set ("numba" or "numpy")."""
    return BACKEND
