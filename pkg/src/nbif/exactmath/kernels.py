"""Kernel selection: compiled extension when built, pure Python otherwise.

Set ``NBIF_PURE_PYTHON=1`` to force the fallback (used by the benchmark and
by the tests that compare both backends).
"""
import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("NBIF_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None
    if _compiled is not None:
        _impl = _compiled
        BACKEND = "cython"

ipoly_mul = _impl.ipoly_mul
taylor_shift1 = _impl.taylor_shift1
sign_variations = _impl.sign_variations
eval_homog = _impl.eval_homog
eval_int = _impl.eval_int
bareiss_det = _impl.bareiss_det
scale_halve = _impl.scale_halve
taylor_shift = _impl.taylor_shift
rem_monic = _impl.rem_monic

__all__ = [
    "BACKEND",
    "ipoly_mul",
    "taylor_shift1",
    "sign_variations",
    "eval_homog",
    "eval_int",
    "bareiss_det",
    "scale_halve",
    "taylor_shift",
    "rem_monic",
]
