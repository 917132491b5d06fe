"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set ``TORUSDEGEN_PURE=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
cone_points = _kernels_py.cone_points
minimal_elements = _kernels_py.minimal_elements

if not os.environ.get("TORUSDEGEN_PURE"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None
    if _compiled is not None:
        BACKEND = "cython"
        cone_points = _compiled.cone_points
        minimal_elements = _compiled.minimal_elements
