"""Integer kernels for grid checks.

``FLOORPARTS_BACKEND`` picks the interpreter: ``numba`` (default when numba
imports) or ``numpy``.  ``FLOORPARTS_BACKEND=exact`` disables the kernels so
every check runs through the Fraction evaluator.
"""
from __future__ import annotations

import os

import numpy as np

from .program import INT_LIMIT, Program, compile_spec, required_scale

__all__ = ["INT_LIMIT", "Program", "compile_spec", "required_scale", "backend", "run", "set_backend"]

_BACKENDS = ("numba", "numpy", "exact")


def _initial_backend() -> str:
    wanted = os.environ.get("FLOORPARTS_BACKEND", "numba").strip().lower()
    if wanted not in _BACKENDS:
        raise RuntimeError(f"FLOORPARTS_BACKEND must be one of {_BACKENDS}, got {wanted!r}")
    if wanted == "numba":
        try:
            import numba  # noqa: F401
        except ImportError:
            return "numpy"
    return wanted


_backend = _initial_backend()


def backend() -> str:
    return _backend


def set_backend(name: str) -> str:
    """Switch backend at runtime (tests and benchmarks); returns the previous one."""
    global _backend
    if name not in _BACKENDS:
        raise ValueError(name)
    prev, _backend = _backend, name
    return prev


def enabled() -> bool:
    return _backend != "exact"


def run(prog: Program, xs: np.ndarray) -> tuple[np.ndarray, bool]:
    """Evaluate ``prog`` at every scaled point; ``ok`` is False if a mu lookup missed."""
    if _backend == "numba":
        from .vm_numba import run as _run
    else:
        from .vm_numpy import run as _run
    return _run(prog, xs)
