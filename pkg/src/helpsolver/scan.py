"""Integer points of a box satisfying a system of constraint rows.

The inner loop runs in the compiled ``_scan`` extension when it is built;
otherwise (or with ``HELPSOLVER_PURE_PYTHON=1``) the pure-Python kernel is used.
Both return the same points in the same order.
"""

from __future__ import annotations

import math
import os
from typing import Sequence

from . import _scan_py
from .bounds import Box
from .constraints import ConstraintRow

try:
    if os.environ.get("HELPSOLVER_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _scan as _native
except ImportError:
    _native = None

BACKEND = "cython" if _native is not None else "python"

_INT64_LIMIT = 2**62

__all__ = ["BACKEND", "integer_points", "scaled_system"]


def scaled_system(rows: Sequence[ConstraintRow], augmentation: bool = True):
    """Rows as integer data ``(A, C, D, U)`` over the free variables.

    Each row is multiplied by the lcm ``D`` of its denominators. With
    ``augmentation`` the last variable is replaced by ``1 - sum(others)``.
    """
    A, C, D, U = [], [], [], []
    for row in rows:
        den = math.lcm(row.constant.denominator, *(c.denominator for c in row.coefficients))
        coeffs = [int(c * den) for c in row.coefficients]
        const = int(row.constant * den)
        if augmentation and coeffs:
            last = coeffs.pop()
            coeffs = [c - last for c in coeffs]
            const += last
        A.append(coeffs)
        C.append(const)
        D.append(den)
        U.append(row.upper * den)
    return A, C, D, U


def fits_int64(A, C, U, lo, hi) -> bool:
    reach = [max(abs(a), abs(b)) for a, b in zip(lo, hi)]
    for coeffs, c, u in zip(A, C, U):
        worst = abs(c) + sum(abs(a) * x for a, x in zip(coeffs, reach))
        if worst >= _INT64_LIMIT or u >= _INT64_LIMIT:
            return False
    return True


def integer_points(rows: Sequence[ConstraintRow], box: Box, augmentation: bool = True,
                   backend: str | None = None) -> list[tuple[int, ...]]:
    """All integer points in ``box`` at which every row is an integer in
    ``[0, upper]`` (and, with ``augmentation``, whose coordinates sum to 1)."""
    if box.empty:
        return []
    bounds = list(box.bounds)
    has_last = augmentation and bool(bounds)
    last_lo, last_hi = bounds.pop() if has_last else (0, 0)
    A, C, D, U = scaled_system(rows, augmentation=has_last)
    lo = [b[0] for b in bounds]
    hi = [b[1] for b in bounds]
    kernel = _scan_py
    if backend is None:
        backend = BACKEND
    if backend == "cython":
        if _native is None:
            raise RuntimeError("compiled scan kernel is not available")
        if fits_int64(A, C, U, lo, hi) and abs(last_lo) < _INT64_LIMIT and abs(last_hi) < _INT64_LIMIT:
            kernel = _native
    elif backend != "python":
        raise ValueError(f"unknown backend {backend!r}")
    return [tuple(p) for p in kernel.scan_box(A, C, D, U, lo, hi, last_lo, last_hi, has_last)]


def check_point(rows: Sequence[ConstraintRow], point: Sequence[int]) -> bool:
    """Direct exact check of one point against every row."""
    return all(row.admits(point) for row in rows)

