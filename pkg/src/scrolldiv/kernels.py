"""Backend selection for the homology kernel.

The compiled extension is used when it imports; SCROLLDIV_PURE_PYTHON=1
forces the pure-Python reference implementation.
"""
import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("SCROLLDIV_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        _impl = _compiled

# the dense compiled kernel is bounded; bigger inputs fall back
_COMPILED_MAXV = 24


def koszul_homology(alphas, betas, blocks, ecap, alim, blim, p):
    if _impl is not _kernels_py and len(alphas) <= _COMPILED_MAXV and p < 2 ** 31:
        return _impl.koszul_homology(alphas, betas, blocks, ecap, alim, blim, p)
    return _kernels_py.koszul_homology(alphas, betas, blocks, ecap, alim, blim, p)


def rank_mod_p(rows, p):
    if _impl is not _kernels_py and p < 2 ** 31:
        return _impl.rank_mod_p(rows, p)
    return _kernels_py.rank_mod_p(rows, p)
