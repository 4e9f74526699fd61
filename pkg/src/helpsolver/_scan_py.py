"""Pure-Python lattice scan; reference for the compiled ``_scan`` kernel."""

from __future__ import annotations

from itertools import product


def scan_box(A, C, D, U, lo, hi, last_lo, last_hi, has_last):
    """Integer points of a box that satisfy every scaled row.

    Row r accepts a point x (free variables only) iff
    ``v = C[r] + sum_i A[r][i] x_i`` has ``v % D[r] == 0`` and ``0 <= v <= U[r]``.
    With ``has_last`` the point is extended by ``1 - sum(x)``, which must lie
    in ``[last_lo, last_hi]``; the rows already account for that substitution.
    """
    rows = list(zip(A, C, D, U))
    found = []
    for point in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if has_last:
            last = 1 - sum(point)
            if last < last_lo or last > last_hi:
                continue
        for coeffs, c, d, u in rows:
            v = c + sum(a * x for a, x in zip(coeffs, point))
            if v < 0 or v > u or v % d:
                break
        else:
            found.append(point + (last,) if has_last else point)
    return found
