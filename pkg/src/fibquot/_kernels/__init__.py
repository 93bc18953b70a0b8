"""Kernel backend selection.

The compiled Cython core is preferred when it was built; otherwise the
pure-Python module with the same contract is used. Set FIBQUOT_BACKEND to
"pure" or "cython" to force one (the benchmark and the equivalence tests
instead pass an explicit module around).
"""

import os

from . import _pure

try:
    from . import _core
except ImportError:
    _core = None

HAVE_CORE = _core is not None

# fib_pair in the compiled core carries products in 128 bits, capping the
# modulus; the pure module has no cap.
CORE_MAX_MODULUS = 1 << 62


def get_kernels(name: str = "auto"):
    """Resolve a backend name ("auto", "pure", "cython") to a kernel module."""
    if name in (None, "", "auto"):
        name = os.environ.get("FIBQUOT_BACKEND", "auto")
    if name in (None, "", "auto"):
        return _core if HAVE_CORE else _pure
    if name == "pure":
        return _pure
    if name in ("cython", "core", "compiled"):
        if not HAVE_CORE:
            raise RuntimeError("compiled kernel backend requested but not built")
        return _core
    raise ValueError(f"unknown kernel backend {name!r}")


def available_backends():
    """Names of the kernel modules importable in this installation."""
    return ("pure", "cython") if HAVE_CORE else ("pure",)


DEFAULT = get_kernels()
BACKEND = DEFAULT.BACKEND
