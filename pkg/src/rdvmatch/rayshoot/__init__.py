"""Dynamic orthogonal ray-shooting index with two interchangeable backends.

The compiled Cython kernel is used when its extension module is present;
otherwise the pure-Python implementation takes over.  Both expose the same
``RayShootIndex`` API and identical semantics, so either can back the
matching algorithms.  Set ``RDVMATCH_RAYSHOOT=pure`` (or ``cython``) to
force a backend at import time; per-call selection goes through
:func:`get_index_class`.
"""

from __future__ import annotations

import os

from . import _pure

_BACKENDS: dict[str, type] = {"pure": _pure.RayShootIndex}
try:
    from . import _cy
except ImportError:
    _cy = None
else:
    _BACKENDS["cython"] = _cy.RayShootIndex

_forced = os.environ.get("RDVMATCH_RAYSHOOT", "").strip().lower()
if _forced and _forced not in _BACKENDS:
    raise ImportError(
        f"RDVMATCH_RAYSHOOT={_forced!r} but available backends are "
        f"{sorted(_BACKENDS)}"
    )

DEFAULT_BACKEND: str = _forced or ("cython" if "cython" in _BACKENDS else "pure")
RayShootIndex = _BACKENDS[DEFAULT_BACKEND]


def available_backends() -> list[str]:
    """Backend names usable on this installation, pure first."""
    return sorted(_BACKENDS)


def get_index_class(backend: str = "auto") -> type:
    """Resolve a backend name ('auto', 'pure' or 'cython') to its class."""
    if backend == "auto":
        return _BACKENDS[DEFAULT_BACKEND]
    try:
        return _BACKENDS[backend]
    except KeyError:
        raise ValueError(
            f"unknown rayshoot backend {backend!r}; available: "
            f"{['auto', *sorted(_BACKENDS)]}"
        ) from None
