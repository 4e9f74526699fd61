"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are dense coefficient vectors over the power basis
1, zeta, ..., zeta^(phi(m)-1), always reduced modulo the m-th cyclotomic
polynomial. Coefficients are :class:`fractions.Fraction`; nothing in here
touches floating point.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "Cyclotomic",
    "GaloisError",
    "Rational",
    "SubfieldError",
    "as_rational",
    "conj",
    "cyclotomic_polynomial",
    "euler_phi",
    "galois",
    "is_rational",
    "parse_rational",
    "root_of_unity",
    "trace_subfield",
    "trace_to_q",
]


class GaloisError(ValueError):
    pass


class SubfieldError(ValueError):
    pass


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    result, k, p = m, m, 2
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            result -= result // p
        p += 1
    if k > 1:
        result -= result // k
    return result


@lru_cache(maxsize=None)
def units(m: int) -> tuple[int, ...]:
    """Representatives of (Z/m)^*, in increasing order."""
    if m == 1:
        return (1,)
    return tuple(j for j in range(1, m) if gcd(j, m) == 1)


def mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


@lru_cache(maxsize=None)
def _ramanujan_sums(m: int) -> tuple[int, ...]:
    """Tr(zeta_m^i) for i < m, i.e. mu(m/g) * phi(m) / phi(m/g) with g = gcd(i, m)."""
    out = []
    for i in range(m):
        q = m // gcd(i, m)
        out.append(mobius(q) * euler_phi(m) // euler_phi(q))
    return tuple(out)


def _poly_divexact(num: list[int], den: Sequence[int]) -> list[int]:
    # den is monic; coefficient lists are low-to-high
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first.

    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if m < 1:
        raise ValueError(f"conductor must be positive, got {m}")
    poly = [-1] + [0] * (m - 1) + [1]
    for e in range(1, m):
        if m % e == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(e))
    return tuple(poly)


def _reduce(m: int, vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Reduce sum vec[i] zeta_m^i (any length) to the canonical basis."""
    full = [Fraction(0)] * m
    for i, c in enumerate(vec):
        if c:
            full[i % m] += c
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    for i in range(m - 1, deg - 1, -1):
        c = full[i]
        if c:
            base = i - deg
            for j in range(deg):
                if phi[j]:
                    full[base + j] -= c * phi[j]
            full[i] = Fraction(0)
    return tuple(full[:deg])


class Cyclotomic:
    """An element of Q(zeta_m) stored as reduced power-basis coefficients.

    Instances are immutable. Binary operations between different conductors
    embed both operands into Q(zeta_lcm) first; the conductor is never
    shrunk automatically (see :meth:`in_conductor`).
    """

    __slots__ = ("m", "coeffs", "_hash")

    def __init__(self, m: int, coeffs: Iterable[Scalar] = ()):
        if m < 1:
            raise ValueError(f"conductor must be positive, got {m}")
        self.m = m
        self.coeffs = _reduce(m, [Fraction(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, m: int, coeffs: tuple[Fraction, ...]) -> "Cyclotomic":
        obj = cls.__new__(cls)
        obj.m = m
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, value: Scalar, m: int = 1) -> "Cyclotomic":
        coeffs = [Fraction(0)] * euler_phi(m)
        coeffs[0] = Fraction(value)
        return cls._raw(m, tuple(coeffs))

    @classmethod
    def from_terms(cls, m: int, terms: Iterable[tuple[Scalar, int]]) -> "Cyclotomic":
        """Build sum coeff * zeta_m^exponent."""
        full = [Fraction(0)] * m
        for coeff, exponent in terms:
            full[exponent % m] += Fraction(coeff)
        return cls(m, full)

    # -- conversions -----------------------------------------------------

    def embed(self, m: int) -> "Cyclotomic":
        """Rewrite self in Q(zeta_m); m must be a multiple of the conductor."""
        if m == self.m:
            return self
        if m % self.m:
            raise ValueError(f"cannot embed conductor {self.m} into {m}")
        step = m // self.m
        full = [Fraction(0)] * m
        for i, c in enumerate(self.coeffs):
            if c:
                full[i * step] = c
        return Cyclotomic(m, full)

    def as_rational(self) -> Fraction | None:
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def is_rational(self) -> bool:
        return self.as_rational() is not None

    def in_conductor(self, s: int) -> "Cyclotomic":
        """Rewrite self as an element of Q(zeta_s).

        Raises SubfieldError if the value does not lie in that field.
        """
        ambient = lcm(self.m, s)
        a = self.embed(ambient)
        step = ambient // s
        n = euler_phi(s)
        # columns: zeta_s^i embedded in Q(zeta_ambient)
        basis = [root_of_unity(ambient, i * step).coeffs for i in range(n)]
        rows = len(a.coeffs)
        matrix = [[basis[j][r] for j in range(n)] + [a.coeffs[r]] for r in range(rows)]
        solution = _solve_consistent(matrix, n)
        if solution is None:
            raise SubfieldError(f"element outside stated subfield Q(zeta_{s})")
        return Cyclotomic._raw(s, tuple(solution))

    # -- ring structure --------------------------------------------------

    def _coerce(self, other) -> "Cyclotomic | None":
        if isinstance(other, Cyclotomic):
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(other, 1)
        return None

    def _align(self, other: "Cyclotomic") -> tuple["Cyclotomic", "Cyclotomic"]:
        if self.m == other.m:
            return self, other
        m = lcm(self.m, other.m)
        return self.embed(m), other.embed(m)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._align(other)
        return Cyclotomic._raw(a.m, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.m, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic._raw(self.m, tuple(c * other for c in self.coeffs))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._align(other)
        prod = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic._raw(a.m, _reduce(a.m, prod))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Cyclotomic.rational(1, self.m)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._align(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        # Tr/phi(m) does not change under embedding, so equal values agree
        if self._hash is None:
            self._hash = hash(self.trace() / euler_phi(self.m))
        return self._hash

    def __repr__(self):
        return f"Cyclotomic({self.m}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "z" if i == 1 else f"z^{i}"
                terms.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return body if self.m == 1 or len(terms) <= 1 and self.is_rational() else f"[{body}]_{self.m}"

    # -- Galois structure ------------------------------------------------

    def galois(self, j: int) -> "Cyclotomic":
        """Apply sigma_j: zeta_m -> zeta_m^j."""
        m = self.m
        if gcd(j, m) != 1:
            raise GaloisError(f"{j} is not a Galois automorphism of Q(zeta_{m})")
        j %= m
        if j == 1 or m <= 2:
            return self
        full = [Fraction(0)] * m
        for i, c in enumerate(self.coeffs):
            if c:
                full[i * j % m] += c
        return Cyclotomic._raw(m, _reduce(m, full))

    def conj(self) -> "Cyclotomic":
        return self.galois(-1)

    def trace(self) -> Fraction:
        """Absolute trace Tr_{Q(zeta_m)/Q}: the sum of all Galois conjugates."""
        sums = _ramanujan_sums(self.m)
        return sum((c * sums[i] for i, c in enumerate(self.coeffs) if c), Fraction(0))

    def trace_subfield(self, s: int) -> Fraction:
        """Tr_{Q(zeta_s)/Q} of an element known to lie in Q(zeta_s)."""
        a = self.embed(lcm(self.m, s))
        m = a.m
        for j in units(m):
            if j % s == 1 and a.galois(j) != a:
                raise SubfieldError(f"element outside stated subfield Q(zeta_{s})")
        return a.trace() * euler_phi(s) / euler_phi(m)


def _solve_consistent(matrix: list[list[Fraction]], n: int) -> list[Fraction] | None:
    """Solve an augmented system with n unknowns; None if inconsistent."""
    rows = [list(r) for r in matrix]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(row[n] for row in rows[r:]):
        return None
    solution = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        solution[col] = rows[i][n]
    return solution


@lru_cache(maxsize=4096)
def root_of_unity(m: int, k: int) -> Cyclotomic:
    """zeta_m^k, with k taken modulo m."""
    full = [Fraction(0)] * m
    full[k % m] = Fraction(1)
    return Cyclotomic(m, full)


def galois(a: Cyclotomic, j: int) -> Cyclotomic:
    return a.galois(j)


def conj(a: Cyclotomic) -> Cyclotomic:
    return a.conj()


def trace_to_q(a: Cyclotomic) -> Fraction:
    return a.trace()


def trace_subfield(a: Cyclotomic, s: int) -> Fraction:
    return a.trace_subfield(s)


def is_rational(a: Cyclotomic) -> bool:
    return a.is_rational()


def as_rational(a: Cyclotomic) -> Fraction | None:
    return a.as_rational()


def evaluate_polynomial(poly: Sequence[Scalar], x: Cyclotomic) -> Cyclotomic:
    """Horner evaluation of an integer/rational polynomial (low-to-high)."""
    acc = Cyclotomic.rational(0, x.m)
    for c in reversed(poly):
        acc = acc * x + Fraction(c)
    return acc


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text) -> Fraction:
    """Parse a bare integer or a "p/q" string; anything else is malformed."""
    if isinstance(text, bool):
        raise ValueError(f"malformed rational {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"malformed rational {text!r}")
    match = _RATIONAL_RE.match(text)
    if not match or (match.group(2) is not None and int(match.group(2)) == 0):
        raise ValueError(f"malformed rational {text!r}")
    den = int(match.group(2)) if match.group(2) is not None else 1
    return Fraction(int(match.group(1)), den)


def parse_literal(obj) -> Cyclotomic:
    """Parse a table value: a bare integer, a "p/q" string, or
    ``{"m": m, "terms": [[coeff, exponent], ...]}``."""
    if isinstance(obj, dict):
        try:
            m = obj["m"]
            terms = obj["terms"]
        except KeyError as exc:
            raise ValueError(f"cyclotomic literal missing key {exc}") from None
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise ValueError(f"bad conductor {m!r} in cyclotomic literal")
        parsed = []
        for term in terms:
            if not isinstance(term, (list, tuple)) or len(term) != 2 or not isinstance(term[1], int):
                raise ValueError(f"bad term {term!r} in cyclotomic literal")
            parsed.append((parse_rational(term[0]), term[1]))
        return Cyclotomic.from_terms(m, parsed)
    return Cyclotomic.rational(parse_rational(obj))


def to_literal(a: Cyclotomic):
    """Inverse of :func:`parse_literal` (rationals collapse to scalars)."""
    q = a.as_rational()
    if q is not None:
        return q.numerator if q.denominator == 1 else str(q)
    return {"m": a.m, "terms": [[str(c), i] for i, c in enumerate(a.coeffs) if c]}
