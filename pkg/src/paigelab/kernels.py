"""Backend selection for the hot loops.

The compiled ``_kernels`` extension is used when it imports; otherwise the
numpy ``_fallback``.  Setting ``PAIGELAB_BACKEND=python`` forces the
fallback.
"""

import os

from . import _fallback

if os.environ.get("PAIGELAB_BACKEND", "").lower() == "python":
    _impl = _fallback
else:
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        _impl = _fallback

BACKEND = "cython" if _impl is not _fallback else "python"

zorn_mul_keys = _impl.zorn_mul_keys
loop_closure = _impl.loop_closure
group_closure = _impl.group_closure
moufang_table = _impl.moufang_table


def backends():
    """Every importable backend module, by name."""
    out = {"python": _fallback}
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        out["cython"] = _kernels
    return out
