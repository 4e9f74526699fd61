"""Multiplicity constraints on the partial augmentations of a unit of order n.

For a character psi and xi = zeta_n^k, the multiplicity of xi as an eigenvalue
of psi(u) is

    mu = (1/n) * sum_{d | n} Tr_{Q(zeta_n^d)/Q}(psi(u^d) * xi^-d),

where psi(u^d) = sum_x eps_x(u^d) psi(x). The d = 1 term is linear in the
unknown partial augmentations of u; the other terms are fixed by a power
datum (tuples already chosen for the proper powers of u). Every mu must be
an integer in [0, psi(1)].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Mapping, Sequence

from .cyclotomic import Cyclotomic, root_of_unity
from .tables import Character, GroupData, TableError

__all__ = [
    "AugmentationTuple",
    "ConstraintRow",
    "OrderError",
    "PowerDatum",
    "VariableSpace",
    "applicable_characters",
    "build_rows",
    "divisors",
    "trivial_tuple",
    "variable_space",
]


class OrderError(ValueError):
    pass


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@dataclass(frozen=True)
class VariableSpace:
    order: int
    variables: tuple[str, ...]


@dataclass(frozen=True)
class AugmentationTuple:
    """Partial augmentations of one unit, as ``(class, value)`` pairs in table order."""

    items: tuple[tuple[str, int], ...]

    @classmethod
    def from_values(cls, variables: Sequence[str], values: Sequence[int]) -> "AugmentationTuple":
        return cls(tuple(zip(variables, (int(v) for v in values))))

    def __getitem__(self, cls_name: str) -> int:
        for name, value in self.items:
            if name == cls_name:
                return value
        return 0

    def as_dict(self) -> dict[str, int]:
        return dict(self.items)

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.items)

    @property
    def support(self) -> list[str]:
        return [name for name, v in self.items if v]

    def concentrated_at(self) -> str | None:
        """The class carrying the whole augmentation, if all other entries vanish."""
        support = self.support
        if len(support) == 1 and self[support[0]] == 1:
            return support[0]
        return None

    def __str__(self):
        return "(" + ", ".join(f"{c}:{v}" for c, v in self.items) + ")"


@dataclass(frozen=True)
class PowerDatum:
    """Tuples for the proper powers u^d, 1 < d < n; u^n = 1 is implicit."""

    order: int
    powers: tuple[tuple[int, AugmentationTuple], ...] = ()

    def __getitem__(self, d: int) -> AugmentationTuple:
        return dict(self.powers)[d]

    def as_dict(self) -> dict[int, AugmentationTuple]:
        return dict(self.powers)


@dataclass(frozen=True)
class ConstraintRow:
    """The affine form ``coefficients . eps + constant``; must be an integer in [0, upper]."""

    character: str
    prime: int | None
    k: int
    variables: tuple[str, ...]
    coefficients: tuple[Fraction, ...]
    constant: Fraction
    upper: int

    def evaluate(self, values: Sequence[int]) -> Fraction:
        return sum((c * v for c, v in zip(self.coefficients, values)), self.constant)

    def admits(self, values: Sequence[int]) -> bool:
        mu = self.evaluate(values)
        return mu.denominator == 1 and 0 <= mu <= self.upper

    @property
    def key(self) -> tuple:
        return (self.coefficients, self.constant, self.upper)


def trivial_tuple(g: GroupData, n: int, cls: str) -> AugmentationTuple:
    """The tuple of a group element of class ``cls`` over the order-n variables."""
    space = variable_space(g, n)
    return AugmentationTuple(tuple((x, int(x == cls)) for x in space.variables))


def variable_space(g: GroupData, n: int) -> VariableSpace:
    if n < 2:
        raise OrderError(f"unit order must exceed 1, got {n}")
    if g.exponent % n:
        raise OrderError(f"{n} does not divide exponent {g.exponent}")
    names = tuple(c.name for c in g.classes if c.element_order > 1 and n % c.element_order == 0)
    return VariableSpace(n, names)


def applicable_characters(g: GroupData, n: int, use_brauer: bool = True) -> list[Character]:
    """Ordinary characters, plus Brauer characters for primes not dividing n."""
    chars = list(g.ordinary)
    if not use_brauer:
        return chars
    for table in g.brauer:
        if gcd(table.prime, n) != 1:
            continue
        regular = set(table.regular_classes)
        # every class whose order divides n is p-regular here
        assert all(c.name in regular for c in g.classes if n % c.element_order == 0)
        chars.extend(table.characters)
    return chars


def _character_sum(psi: Character, tup: AugmentationTuple, m: int) -> Cyclotomic:
    total = Cyclotomic.rational(0, m)
    for cls, eps in tup.items:
        if eps:
            total = total + psi(cls).embed(m) * eps
    return total


def _rows_for(psi: Character, n: int, space: VariableSpace,
              datum_sums: Mapping[int, Cyclotomic]) -> Iterator[ConstraintRow]:
    values = [psi(x).embed(n) for x in space.variables]
    for k in range(n):
        xi_inv = root_of_unity(n, -k)
        coeffs = tuple((v * xi_inv).trace() / n for v in values)
        # d = n: psi(1) * xi^-n = psi(1), traced over Q
        const = Fraction(psi.degree)
        for d, s in datum_sums.items():
            const += (s * root_of_unity(n, -d * k)).trace_subfield(n // d)
        yield ConstraintRow(psi.name, psi.prime, k, space.variables, coeffs,
                            const / n, psi.degree)


def build_rows(g: GroupData, n: int, datum: PowerDatum | None = None,
               use_brauer: bool = True, dedupe: bool = True) -> list[ConstraintRow]:
    """All constraint rows for order n under the given power datum.

    Rows are ordered by character (table order, ordinary first) then k;
    with ``dedupe`` later duplicates of an identical row are dropped.
    """
    if n == 1:
        space = VariableSpace(1, ())
        datum_pairs: dict[int, AugmentationTuple] = {}
    else:
        space = variable_space(g, n)
        datum_pairs = (datum.as_dict() if datum is not None else {})
        expected = {d for d in divisors(n) if 1 < d < n}
        if set(datum_pairs) != expected:
            raise ValueError(f"power datum for order {n} must cover divisors {sorted(expected)}")
    rows = []
    seen = set()
    for psi in applicable_characters(g, n, use_brauer):
        try:
            sums = {d: _character_sum(psi, t, n) for d, t in datum_pairs.items()}
        except KeyError as exc:
            raise TableError(f"{psi.label} has no value at {exc}") from None
        for row in _rows_for(psi, n, space, sums):
            if dedupe:
                if row.key in seen:
                    continue
                seen.add(row.key)
            rows.append(row)
    return rows
