"""Backend selection for the hot kernels.

Every performance-critical loop in this package is written once, as plain
Python over numpy arrays, and compiled with numba's ``@njit`` when numba is
available.  The exact same source also runs uncompiled, which is the
dependency-light fallback and the reference half of the differential tests.

Selection order:

* ``ZWALK_NO_NUMBA=1`` in the environment forces the pure-Python path.
* otherwise numba is used when importable.
* :func:`set_backend` overrides either at runtime (used by the benchmark
  harness to compare both paths in one process).
"""

import os

try:
    import numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAS_NUMBA = False


def _from_env() -> str:
    if os.environ.get("ZWALK_NO_NUMBA", "") not in ("", "0"):
        return "python"
    return "numba" if HAS_NUMBA else "python"


_active = _from_env()


def active_backend() -> str:
    return _active


def use_numba() -> bool:
    return _active == "numba"


def set_backend(name: str) -> None:
    global _active
    if name not in ("numba", "python"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAS_NUMBA:
        raise RuntimeError("numba is not importable in this environment")
    _active = name


class dual:
    """A kernel that runs compiled or uncompiled depending on the backend.

    Wraps one function; ``.py`` is the original, ``.jit`` the njit-compiled
    version (compiled lazily on first call, cached on disk).
    """

    __slots__ = ("py", "_jit")

    def __init__(self, fn):
        self.py = fn
        self._jit = None

    @property
    def jit(self):
        if self._jit is None:
            if not HAS_NUMBA:  # pragma: no cover
                raise RuntimeError("numba backend requested but numba is missing")
            self._jit = numba.njit(cache=True)(self.py)
        return self._jit

    def __call__(self, *args):
        if _active == "numba":
            return self.jit(*args)
        return self.py(*args)
