"""Pick the compiled search loops when available, else the numpy fallback.

Set DVL_PURE_PYTHON=1 to force the fallback.
"""
import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("DVL_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        pass
    else:
        _impl, BACKEND = _compiled, "cython"


def get_backend(name=None):
    """Module implementing brute_scan/kernel_scan; name is 'cython' or 'python'."""
    if name is None:
        return _impl
    if name == "python":
        return _kernels_py
    if name == "cython":
        from . import _kernels

        return _kernels
    raise ValueError(f"unknown backend {name!r}")


def brute_scan(*args):
    return _impl.brute_scan(*args)


def kernel_scan(*args):
    return _impl.kernel_scan(*args)
