"""Backend selection for the blade kernels.

Prefers the compiled extension, falls back to the pure-Python module.
Set CLIFFSIG_PURE_PYTHON=1 to force the fallback (used by the benchmark
and by CI to exercise both paths).
"""

import os

BACKEND = "python"

if not os.environ.get("CLIFFSIG_PURE_PYTHON"):
    try:
        from cliffsig._kernels import (  # noqa: F401
            blade_left_contract,
            blade_metric_sign,
            blade_mul,
            blade_right_contract,
            blade_wedge,
            grade,
            reorder_sign,
        )

        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from cliffsig._kernels_py import (  # noqa: F401
        blade_left_contract,
        blade_metric_sign,
        blade_mul,
        blade_right_contract,
        blade_wedge,
        grade,
        reorder_sign,
    )
