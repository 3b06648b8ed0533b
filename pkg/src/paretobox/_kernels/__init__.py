"""Kernel backend selection: compiled Cython core with a NumPy fallback.

The compiled module `_core` carries the hot inner loops (diagonal-GMM EM and
all-pairs Pareto filtering). If it is missing, the NumPy `_fallback` module
serves the same functions. Selection happens at import; tests and benchmarks
can switch explicitly via :func:`set_backend`, and the environment variable
PARETOBOX_KERNELS=python forces the fallback.
"""

from __future__ import annotations

import os

from . import _fallback

try:
    from . import _core
except ImportError:
    _core = None

_BACKENDS = {"python": _fallback}
if _core is not None:
    _BACKENDS["compiled"] = _core

if os.environ.get("PARETOBOX_KERNELS") == "python" or _core is None:
    _active = _fallback
else:
    _active = _core


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def backend_name() -> str:
    return _active.NAME


def set_backend(name: str) -> None:
    """Select `compiled` or `python`. Raises if the backend is unavailable."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}; available: {available_backends()}")
    _active = _BACKENDS[name]


def pareto_mask(costs):
    return _active.pareto_mask(costs)


def em_fit_diag(x, weights, means, variances, floor, max_iters, tol):
    return _active.em_fit_diag(x, weights, means, variances, floor, max_iters, tol)
