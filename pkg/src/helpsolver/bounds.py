"""Exact integer bounding boxes by Fourier-Motzkin elimination.

Each constraint row contributes ``0 <= a.x + c <= U``. With the augmentation
equation ``sum x = 1`` one variable is substituted away before elimination.
Redundancy is kept down by normalizing every inequality to a primitive
integer direction, keeping only the tightest constant per direction, and
Chernikov's rule (a combination of more than k+1 originals after k
eliminations is redundant).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .constraints import ConstraintRow

__all__ = ["Box", "UnboundedError", "bound_box"]


class UnboundedError(ValueError):
    pass


@dataclass(frozen=True)
class Box:
    """Per-variable integer intervals; ``empty`` when the system is infeasible."""

    variables: tuple[str, ...]
    bounds: tuple[tuple[int, int], ...]
    empty: bool = False

    @property
    def size(self) -> int:
        if self.empty:
            return 0
        return math.prod(hi - lo + 1 for lo, hi in self.bounds)

    def as_dict(self) -> dict[str, tuple[int, int]]:
        return dict(zip(self.variables, self.bounds))


# inequality: coeffs . x + const >= 0, with coeffs a primitive integer vector
_Ineq = tuple[tuple[int, ...], Fraction]


def _normalize(coeffs: Sequence[Fraction], const: Fraction) -> _Ineq | None:
    """Scale by a positive factor to a primitive integer direction.

    Returns None for trivially true inequalities; raises _Infeasible for
    trivially false ones.
    """
    if not any(coeffs):
        if const < 0:
            raise _Infeasible
        return None
    den = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    g = math.gcd(*ints)
    scale = Fraction(den, g)
    return tuple(v // g for v in ints), const * scale


class _Infeasible(Exception):
    pass


class _System:
    def __init__(self, nvars: int):
        self.nvars = nvars
        # direction -> (tightest constant, history frozenset)
        self.best: dict[tuple[int, ...], tuple[Fraction, frozenset]] = {}

    def add(self, coeffs, const, history: frozenset) -> None:
        norm = _normalize(coeffs, const)
        if norm is None:
            return
        direction, c = norm
        old = self.best.get(direction)
        if old is None or c < old[0] or (c == old[0] and len(history) < len(old[1])):
            self.best[direction] = (c, history)

    def items(self):
        return [(d, c, h) for d, (c, h) in self.best.items()]


def _eliminate(system: _System, var: int, step: int) -> _System:
    pos, neg, out = [], [], _System(system.nvars)
    for d, c, h in system.items():
        if d[var] > 0:
            pos.append((d, c, h))
        elif d[var] < 0:
            neg.append((d, c, h))
        else:
            out.best[d] = (c, h)
    for dp, cp, hp in pos:
        for dn, cn, hn in neg:
            hist = hp | hn
            if len(hist) > step + 1:
                continue
            a, b = -dn[var], dp[var]
            coeffs = [Fraction(a * x + b * y) for x, y in zip(dp, dn)]
            coeffs[var] = Fraction(0)
            out.add(coeffs, a * cp + b * cn, hist)
    return out


def _occurrences(system: _System, var: int) -> int:
    return sum(1 for d in system.best if d[var])


def _interval(system: _System, var: int, name: str) -> tuple[Fraction, Fraction]:
    lo, hi = None, None
    for d, c, _ in system.items():
        a = d[var]
        bound = -c / a
        if a > 0:
            lo = bound if lo is None else max(lo, bound)
        else:
            hi = bound if hi is None else min(hi, bound)
    if lo is None or hi is None:
        raise UnboundedError(f"constraint system does not bound the solution region ({name})")
    return lo, hi


def _initial(rows: Sequence[ConstraintRow], nvars: int, substitute: int | None) -> _System:
    system = _System(nvars)
    for i, row in enumerate(rows):
        coeffs = list(row.coefficients)
        const = row.constant
        if substitute is not None:
            # x_s = 1 - sum_{j != s} x_j
            a = coeffs[substitute]
            coeffs = [c - a for c in coeffs]
            coeffs[substitute] = Fraction(0)
            const += a
        system.add(coeffs, const, frozenset([2 * i]))
        system.add([-c for c in coeffs], row.upper - const, frozenset([2 * i + 1]))
    return system


def bound_box(rows: Sequence[ConstraintRow], variables: Sequence[str] | None = None,
              augmentation: bool = True) -> Box:
    """Integer bounds on every variable implied by ``0 <= row <= upper`` and,
    if ``augmentation``, by ``sum x = 1``.

    Raises UnboundedError if some variable is not bounded on both sides.
    """
    if variables is None:
        variables = rows[0].variables if rows else ()
    variables = tuple(variables)
    n = len(variables)
    if n == 0:
        return Box((), ())
    if augmentation and n == 1:
        bounds = [(Fraction(1), Fraction(1))]
        try:
            _initial(rows, n, None)
        except _Infeasible:
            return Box(variables, ((1, 1),), empty=True)
    else:
        bounds = []
        try:
            for target in range(n):
                sub = None
                if augmentation:
                    sub = 0 if target != 0 else 1
                system = _initial(rows, n, sub)
                others = [v for v in range(n) if v != target and v != sub]
                step = 0
                while others:
                    others.sort(key=lambda v: _occurrences(system, v))
                    var = others.pop(0)
                    step += 1
                    system = _eliminate(system, var, step)
                bounds.append(_interval(system, target, variables[target]))
        except _Infeasible:
            return Box(variables, tuple((0, -1) for _ in variables), empty=True)
    ints = tuple((math.ceil(lo), math.floor(hi)) for lo, hi in bounds)
    empty = any(lo > hi for lo, hi in ints)
    return Box(variables, ints, empty)
