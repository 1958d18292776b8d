"""Kernel backend selection.

The compiled backend is used when the extension was built; otherwise the
pure-Python module is loaded.  Both expose the same functions, and
``use_backend`` swaps them at runtime (benchmarks and cross-checking tests).
"""
from __future__ import annotations

from types import ModuleType

from . import _kernels_py

try:
    from . import _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

_NAMES = (
    "cross", "dot", "det3", "minors_vanish", "veronese", "det",
    "det6_veronese", "kernel5", "quad", "matvec",
)


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _kernels_c is not None else [])


def _install(mod: ModuleType) -> None:
    g = globals()
    for name in _NAMES:
        g[name] = getattr(mod, name)
    g["BACKEND"] = mod.BACKEND


def use_backend(name: str) -> str:
    """Select ``"python"`` or ``"cython"``; returns the previously active name."""
    previous = BACKEND
    if name == "python":
        _install(_kernels_py)
    elif name == "cython":
        if _kernels_c is None:
            raise RuntimeError("compiled kernels are not built")
        _install(_kernels_c)
    else:
        raise ValueError(f"unknown backend {name!r}")
    return previous


BACKEND = "python"
_install(_kernels_c if _kernels_c is not None else _kernels_py)
