"""Kernel dispatch: the compiled extension when importable, else pure Python.

Set ``NCPENROSE_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _kernels_py

if os.environ.get("NCPENROSE_PURE_PYTHON") == "1":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

avoiding_masks = _impl.avoiding_masks
unit_hom_check = _impl.unit_hom_check


def encode_images(images, tgt_dim):
    """Pack per-unit lists of target units ``(row, col)`` for ``unit_hom_check``."""
    ptr = [0]
    codes = []
    for img in images:
        codes.extend(sorted(p * tgt_dim + q for p, q in img))
        ptr.append(len(codes))
    return ptr, codes


def check_unit_map(units, images, src_dim, tgt_dim):
    """Multiplicativity of a map on matrix units; ``None`` or a failing pair."""
    ptr, codes = encode_images(images, tgt_dim)
    u, v = unit_hom_check([a for a, _ in units], [b for _, b in units],
                          ptr, codes, src_dim, tgt_dim)
    if u < 0:
        return None
    return units[u], units[v]
