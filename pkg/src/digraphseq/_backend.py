"""Selects the profile kernels at import time.

The compiled extension is preferred. Setting ``DIGRAPHSEQ_PURE_PYTHON=1``
forces the pure-Python fallback.
"""

import contextlib
import os

import numpy as np

from . import _pykernels


class _PythonKernels:
    name = "python"

    @staticmethod
    def noloop_profile(b):
        return np.asarray(_pykernels.noloop_profile(np.asarray(b).tolist()), dtype=np.int64)

    @staticmethod
    def loop_profile(b):
        return np.asarray(_pykernels.loop_profile(np.asarray(b).tolist()), dtype=np.int64)


class _CompiledKernels:
    name = "compiled"

    def __init__(self, module):
        self._mod = module

    def noloop_profile(self, b):
        return self._mod.noloop_profile(np.ascontiguousarray(b, dtype=np.int64))

    def loop_profile(self, b):
        return self._mod.loop_profile(np.ascontiguousarray(b, dtype=np.int64))


def _load_compiled():
    try:
        from . import _ckernels
    except ImportError:
        return None
    return _CompiledKernels(_ckernels)


_COMPILED = _load_compiled()
PYTHON = _PythonKernels()


def available():
    """Names of the kernel backends that can be used in this process."""
    return ("compiled", "python") if _COMPILED is not None else ("python",)


def get(name=None):
    """Return a kernel backend by name; ``None`` means the active default."""
    if name is None:
        return ACTIVE
    if name == "python":
        return PYTHON
    if name == "compiled":
        if _COMPILED is None:
            raise RuntimeError("compiled kernels are not built; run `pip install -e .`")
        return _COMPILED
    raise ValueError(f"unknown backend {name!r}")


if os.environ.get("DIGRAPHSEQ_PURE_PYTHON", "") not in ("", "0") or _COMPILED is None:
    ACTIVE = PYTHON
else:
    ACTIVE = _COMPILED

BACKEND = ACTIVE.name


@contextlib.contextmanager
def using(name):
    """Temporarily make ``name`` the default backend (single-threaded use only)."""
    global ACTIVE
    previous, ACTIVE = ACTIVE, get(name)
    try:
        yield ACTIVE
    finally:
        ACTIVE = previous
