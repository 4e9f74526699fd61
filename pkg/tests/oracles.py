"""Independent reference computations used by the tests.

Nothing here calls the constraint row builder, Fourier-Motzkin bounds or
the scan kernels. Multiplicities are computed by plain discrete Fourier
inversion over all powers u^i, with psi(u^i) obtained from psi(u^d),
d = gcd(i, n), by the Galois action.
"""

from __future__ import annotations

import cmath
import itertools
from fractions import Fraction
from math import gcd

from helpsolver.cyclotomic import Cyclotomic, root_of_unity
from helpsolver.tables import GroupData, power_class


def numeric(a: Cyclotomic) -> complex:
    return sum(float(c) * cmath.exp(2j * cmath.pi * i / a.m) for i, c in enumerate(a.coeffs))


def trace_by_conjugates(a: Cyclotomic) -> Fraction:
    total = Cyclotomic.rational(0, a.m)
    for j in range(1, a.m + 1):
        if gcd(j, a.m) == 1:
            total = total + a.galois(j)
    q = total.as_rational()
    assert q is not None
    return q


def _primes(n):
    return [p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))]


def oracle_characters(g: GroupData, n: int, use_brauer: bool = True):
    chars = list(g.ordinary)
    if use_brauer:
        for t in g.brauer:
            if n % t.prime:
                chars.extend(t.characters)
    return chars


def psi_powers(psi, n: int, profile: dict[int, dict[str, int]]) -> list[Cyclotomic]:
    """psi(u^i) for i = 0..n-1 from the tuples of u^d, d | n, d < n."""
    at_divisor = {n: Cyclotomic.rational(psi.degree, n)}
    for d, tup in profile.items():
        total = Cyclotomic.rational(0, n)
        for cls, e in tup.items():
            if e:
                total = total + psi.values[cls].embed(n) * e
        at_divisor[d] = total
    out = []
    for i in range(n):
        d = gcd(i, n) if i else n
        j = i // d if i else 1
        # lift j to a unit mod n acting like j on Q(zeta_{n/d})
        while gcd(j, n) != 1:
            j += n // d
        out.append(at_divisor[d].galois(j))
    return out


def multiplicities(psi, n: int, profile) -> list[Fraction | None]:
    values = psi_powers(psi, n, profile)
    out = []
    for k in range(n):
        total = Cyclotomic.rational(0, n)
        for i, v in enumerate(values):
            total = total + v * root_of_unity(n, -i * k)
        q = total.as_rational()
        out.append(None if q is None else q / n)
    return out


def affine_multiplicities(psi, n, names, lower):
    """mu_k as affine functions of the unknown tuple: (constant, per-variable slopes).

    Exact because psi(u^i) is linear in the tuple of u; the DFT is evaluated
    at the zero tuple and at each unit vector.
    """
    zero = multiplicities(psi, n, {1: dict.fromkeys(names, 0), **lower})
    slopes = []
    for x in names:
        unit = {1: {y: int(y == x) for y in names}, **lower}
        slopes.append([a - b for a, b in zip(multiplicities(psi, n, unit), zero)])
    return zero, slopes


def _admissible(forms, point) -> bool:
    for degree, zero, slopes in forms:
        for k, base in enumerate(zero):
            mu = base + sum(s[k] * e for s, e in zip(slopes, point))
            if mu.denominator != 1 or not 0 <= mu <= degree:
                return False
    return True


def _concentrated(tup: dict[str, int]) -> str | None:
    nz = [c for c, v in tup.items() if v]
    return nz[0] if len(nz) == 1 and tup[nz[0]] == 1 else None


class BruteForce:
    """Enumerates admissible profiles {d: tuple of u^d} for every order,
    trying all tuples with entries in [-radius, radius] summing to 1."""

    def __init__(self, g: GroupData, radius: int = 8, use_brauer: bool = True):
        self.g, self.radius, self.use_brauer = g, radius, use_brauer
        self._memo: dict[int, list[dict[int, dict[str, int]]]] = {}

    def variables(self, n):
        return [c.name for c in self.g.classes if c.element_order != 1 and n % c.element_order == 0]

    def _lower_profiles(self, n):
        primes = [q for q in _primes(n) if n // q > 1]
        for combo in itertools.product(*(self.profiles(n // q) for q in primes)):
            merged, ok = {}, True
            for q, prof in zip(primes, combo):
                for e, tup in prof.items():
                    d = q * e
                    if d in merged and merged[d] != tup:
                        ok = False
                    merged[d] = tup
            if ok:
                yield merged

    def profiles(self, n):
        """Admissible profiles of order n; key 1 holds the tuple of u itself."""
        if n in self._memo:
            return self._memo[n]
        names = self.variables(n)
        chars = oracle_characters(self.g, n, self.use_brauer)
        r = self.radius
        found = []
        for lower in self._lower_profiles(n):
            forms = [(psi.degree, *affine_multiplicities(psi, n, names, lower)) for psi in chars]
            for head in itertools.product(range(-r, r + 1), repeat=len(names) - 1):
                last = 1 - sum(head)
                if not -r <= last <= r:
                    continue
                point = head + (last,)
                if not _admissible(forms, point):
                    continue
                profile = {1: dict(zip(names, point)), **lower}
                if self._impossible(n, profile):
                    continue
                found.append(profile)
        self._memo[n] = found
        return found

    def _impossible(self, n, profile) -> bool:
        # every power concentrated on one class: must be a genuine element of order n
        cls = _concentrated(profile[1])
        if cls is None or any(_concentrated(t) is None for t in profile.values()):
            return False
        if self.g.order_of(cls) != n:
            return True
        return any(_concentrated(t) != power_class(self.g, cls, d) for d, t in profile.items() if d > 1)

    def tuples(self, n) -> set[tuple[tuple[str, int], ...]]:
        return {tuple(p[1].items()) for p in self.profiles(n)}
