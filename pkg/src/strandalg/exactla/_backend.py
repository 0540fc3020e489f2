"""Pick the compiled kernel when it was built, else the Python twin."""

from __future__ import annotations

from . import _kernels_py

try:
    from . import _kernels as _compiled  # type: ignore[attr-defined]

    HAVE_EXT = True
except ImportError:  # pragma: no cover - depends on the build
    _compiled = None
    HAVE_EXT = False

_use_ext = HAVE_EXT


def use_extension(flag: bool) -> None:
    """Switch between kernels (tests and benchmarks compare both)."""
    global _use_ext
    if flag and not HAVE_EXT:
        raise RuntimeError("compiled kernel is not available")
    _use_ext = flag


def backend_name() -> str:
    return "cython" if _use_ext else "python"


def rref_modp(a: list[list[int]], p: int) -> list[int]:
    if _use_ext and p < (1 << 31):
        return _compiled.rref_modp(a, p)
    return _kernels_py.rref_modp(a, p)
