"""Search-kernel backend selection.

Imports the compiled Cython kernels when the extension was built, falling
back to the pure-Python reference otherwise. Set CFHYPER_BACKEND=pure or
CFHYPER_BACKEND=compiled to force a choice (the latter raises when the
extension is unavailable). Both backends explore identical search trees;
tests assert verdict-, witness-, and node-count-level agreement.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _kernels_py

_cy: ModuleType | None
try:
    from . import _kernels_cy as _cy_mod

    _cy = _cy_mod
except ImportError:
    _cy = None

_choice = os.environ.get("CFHYPER_BACKEND", "").strip().lower()
if _choice in ("", "auto"):
    _impl: ModuleType = _cy if _cy is not None else _kernels_py
elif _choice in ("pure", "python"):
    _impl = _kernels_py
elif _choice == "compiled":
    if _cy is None:
        raise ImportError(
            "CFHYPER_BACKEND=compiled but the cfhyper._kernels_cy extension "
            "is not built; reinstall the package or use CFHYPER_BACKEND=pure")
    _impl = _cy
else:
    raise ImportError(f"unknown CFHYPER_BACKEND value {_choice!r}")

# status codes shared by both backends
FOUND = _kernels_py.FOUND
UNSAT = _kernels_py.UNSAT
BUDGET = _kernels_py.BUDGET
CONFLICT_FREE = _kernels_py.CONFLICT_FREE
PROPER = _kernels_py.PROPER

solve_degree_constrained = _impl.solve_degree_constrained
color_search = _impl.color_search


def backend_name() -> str:
    """Name of the active backend: 'compiled' or 'pure'."""
    return _impl.BACKEND_NAME


def available_backends() -> dict[str, ModuleType]:
    """All importable kernel backends, keyed by name."""
    out: dict[str, ModuleType] = {"pure": _kernels_py}
    if _cy is not None:
        out["compiled"] = _cy
    return out
