"""Backend selection for the angulation search kernel.

The compiled ``_enum_cy`` extension is preferred; the pure-Python
``_enum_py`` module is the fallback. Set ``CLUSTERK0_PURE_PYTHON=1`` to force
the fallback.
"""

import os

if os.environ.get("CLUSTERK0_PURE_PYTHON"):
    from ._enum_py import NodeLimitExceeded, angulations, count_angulations
    BACKEND = "python"
else:
    try:
        from ._enum_cy import NodeLimitExceeded, angulations, count_angulations
        BACKEND = "cython"
    except ImportError:
        from ._enum_py import NodeLimitExceeded, angulations, count_angulations
        BACKEND = "python"

__all__ = ["BACKEND", "NodeLimitExceeded", "angulations", "count_angulations"]
