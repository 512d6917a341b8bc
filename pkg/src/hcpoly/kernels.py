"""Kernel backend selection.

The compiled extension is used when it was built; otherwise the pure-Python
fallbacks take over with identical results.  Setting HCPOLY_PURE=1 in the
environment forces the fallback, which is what the benchmark and the
backend-equivalence tests rely on.
"""

from __future__ import annotations

import os

if os.environ.get("HCPOLY_PURE") == "1":
    from . import _pykernels as _impl

    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        from . import _pykernels as _impl  # type: ignore[no-redef]

        BACKEND = "python"

divisor_count_gf2 = _impl.divisor_count_gf2
max_tau_gf2 = _impl.max_tau_gf2
find_order_tie = _impl.find_order_tie
