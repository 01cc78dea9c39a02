"""Backend selection for the search kernels.

The compiled extension is used when it imports; otherwise the pure-Python
reference implementation.  ``set_backend`` switches explicitly (tests and the
benchmark exercise both).
"""

from __future__ import annotations

from types import ModuleType

from . import _pykernels

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS: dict[str, ModuleType] = {"python": _pykernels}
if _compiled is not None:
    BACKENDS["compiled"] = _compiled

_active = "compiled" if _compiled is not None else "python"


def backend_name() -> str:
    return _active


def get_backend(name: str | None = None) -> ModuleType:
    return BACKENDS[name or _active]


def set_backend(name: str) -> None:
    global _active
    if name not in BACKENDS:
        raise ValueError(f"unknown or unavailable backend {name!r}; have {sorted(BACKENDS)}")
    _active = name
