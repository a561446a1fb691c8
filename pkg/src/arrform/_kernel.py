"""Backend selection for the elimination kernel.

The compiled extension is preferred when built; set ARRFORM_PURE_PYTHON=1
to force the pure-Python fallback (the benchmark uses this to compare the
two implementations).
"""

import os

if os.environ.get("ARRFORM_PURE_PYTHON"):
    from arrform._pykernel import dots, eliminate

    BACKEND = "python"
else:
    try:
        from arrform._ckernel import dots, eliminate  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        from arrform._pykernel import dots, eliminate  # type: ignore[no-redef]

        BACKEND = "python"

__all__ = ["eliminate", "dots", "BACKEND"]
