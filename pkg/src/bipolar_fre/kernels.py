"""Backend selection for the bitmask sweeps.

The compiled extension is used when it was built; otherwise, or when
``BIPOLAR_FRE_PURE=1`` is set, the pure-Python module is used. Both expose
``sweep_family``, ``find_assignment`` and ``maximal_masks``.
"""

import os

from . import _kernels_py

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = {"python": _kernels_py}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

if _ckernels is not None and os.environ.get("BIPOLAR_FRE_PURE", "") in ("", "0"):
    BACKEND = "cython"
else:
    BACKEND = "python"

_impl = BACKENDS[BACKEND]
sweep_family = _impl.sweep_family
find_assignment = _impl.find_assignment
maximal_masks = _impl.maximal_masks
