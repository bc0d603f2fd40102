"""Kernel backend selection.

The compiled ``_ckernels`` module is used when it was built; otherwise the
pure-Python ``_pykernels`` module is used. Set ``INTERPFIT_PURE_PYTHON=1``
to force the fallback.
"""
import os

from . import _pykernels

kernels = _pykernels

if not os.environ.get("INTERPFIT_PURE_PYTHON"):
    try:
        from . import _ckernels as kernels  # noqa: F811
    except ImportError:
        pass

BACKEND = kernels.BACKEND


def available():
    """Names of every importable backend, fallback first."""
    names = ["python"]
    try:
        from . import _ckernels  # noqa: F401
    except ImportError:
        return names
    return names + ["cython"]


def get(name):
    if name == "python":
        return _pykernels
    if name == "cython":
        from . import _ckernels

        return _ckernels
    raise ValueError(f"unknown backend {name!r}")
