"""Kernel dispatch: compiled extension when available, pure Python otherwise.

Set ``RIGMAT_PURE=1`` to force the pure backend (used by the benchmark and
for debugging kernel discrepancies).
"""

import os

from rigmat._kernels import pyref

if os.environ.get("RIGMAT_PURE"):
    impl = pyref
else:
    try:
        from rigmat._kernels import _ckern as impl  # type: ignore[no-redef]
    except ImportError:
        impl = pyref

BACKEND: str = impl.BACKEND


def backends() -> dict:
    """All importable kernel backends, keyed by name."""
    out = {"python": pyref}
    try:
        from rigmat._kernels import _ckern

        out["c"] = _ckern
    except ImportError:
        pass
    return out
