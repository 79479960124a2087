"""Select the compiled kernels when the extension is built, else pure Python.

Setting ``LEGENDRE_PAIRS_BACKEND=python`` forces the fallback even when the
extension is present.
"""

import os

if os.environ.get("LEGENDRE_PAIRS_BACKEND", "").lower() == "python":
    from . import _pykernels as kernels

    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels

        BACKEND = "cython"
    except ImportError:  # extension not built
        from . import _pykernels as kernels

        BACKEND = "python"

correlation = kernels.correlation
brute_force_range = kernels.brute_force_range
chi_shift_sums = kernels.chi_shift_sums

__all__ = ["BACKEND", "correlation", "brute_force_range", "chi_shift_sums"]
