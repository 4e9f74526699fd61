"""Character table data: classes, ordinary and Brauer characters, power maps."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from importlib import resources
from math import gcd
from typing import Iterable, Mapping

from .cyclotomic import Cyclotomic, SubfieldError, lcm, parse_literal

__all__ = [
    "BrauerTable",
    "Character",
    "ConjClass",
    "GroupData",
    "TableError",
    "Violation",
    "load_bundled",
    "parse_group_data",
    "power_class",
    "p_regular_classes",
    "prime_factors",
    "validate_orthogonality",
]


class TableError(ValueError):
    """Raised for malformed or inconsistent character table input."""


def prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class ConjClass:
    name: str
    element_order: int
    centralizer_order: int
    powermap: Mapping[int, str] = field(default_factory=dict)


@dataclass(frozen=True)
class Character:
    """An irreducible character; ``prime`` is set for Brauer characters."""

    name: str
    degree: int
    values: Mapping[str, Cyclotomic]
    prime: int | None = None

    def __call__(self, cls: str) -> Cyclotomic:
        return self.values[cls]

    @property
    def label(self) -> str:
        return self.name if self.prime is None else f"{self.name} (mod {self.prime})"


@dataclass(frozen=True)
class BrauerTable:
    prime: int
    regular_classes: tuple[str, ...]
    characters: tuple[Character, ...]


@dataclass(frozen=True, eq=False)
class GroupData:
    name: str
    group_order: int
    classes: tuple[ConjClass, ...]
    ordinary: tuple[Character, ...]
    brauer: tuple[BrauerTable, ...]

    @cached_property
    def exponent(self) -> int:
        e = 1
        for c in self.classes:
            e = lcm(e, c.element_order)
        return e

    @cached_property
    def by_name(self) -> dict[str, ConjClass]:
        return {c.name: c for c in self.classes}

    @cached_property
    def identity(self) -> str:
        return next(c.name for c in self.classes if c.element_order == 1)

    def order_of(self, cls: str) -> int:
        return self.by_name[cls].element_order

    def brauer_table(self, p: int) -> BrauerTable | None:
        return next((t for t in self.brauer if t.prime == p), None)

    def without_brauer(self) -> "GroupData":
        return GroupData(self.name, self.group_order, self.classes, self.ordinary, ())


# -- parsing -----------------------------------------------------------------


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise TableError(msg)


def _positive_int(value, what: str) -> int:
    _require(isinstance(value, int) and not isinstance(value, bool) and value > 0,
             f"{what} must be a positive integer, got {value!r}")
    return value


def _parse_character(raw, class_names: Iterable[str], orders: Mapping[str, int], identity: str,
                     prime: int | None) -> Character:
    _require(isinstance(raw, dict), f"character entry must be an object, got {raw!r}")
    name = raw.get("name")
    _require(isinstance(name, str) and name != "", "character without a name")
    values_raw = raw.get("values")
    _require(isinstance(values_raw, dict), f"character {name}: missing values")
    expected = list(class_names)
    for cls in values_raw:
        _require(cls in orders, f"character {name}: unknown class reference {cls!r}")
        _require(cls in expected, f"character {name}: class {cls!r} is not {prime}-regular")
    values = {}
    for cls in expected:
        _require(cls in values_raw, f"character {name}: no value at class {cls!r}")
        try:
            value = parse_literal(values_raw[cls])
        except ValueError as exc:
            raise TableError(f"character {name} at {cls}: {exc}") from None
        order = orders[cls]
        try:
            value = value.in_conductor(order)
        except SubfieldError:
            raise TableError(
                f"character {name} at {cls}: value outside Q(zeta_ord) (ord = {order})"
            ) from None
        values[cls] = value
    deg = values[identity].as_rational()
    _require(deg is not None and deg.denominator == 1 and deg > 0,
             f"character {name}: degree mismatch at {identity!r} (value {values[identity]})")
    if "degree" in raw:
        _require(raw["degree"] == deg, f"character {name}: degree mismatch at {identity!r}")
    return Character(name, int(deg), values, prime)


def parse_group_data(text: str | bytes | dict) -> GroupData:
    """Parse and validate a group JSON document (string, bytes or decoded)."""
    if isinstance(text, (str, bytes)):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise TableError(f"invalid JSON: {exc}") from None
    else:
        doc = text
    _require(isinstance(doc, dict), "group document must be a JSON object")
    for key in ("name", "group_order", "classes", "ordinary"):
        _require(key in doc, f"missing key {key!r}")
    name = doc["name"]
    _require(isinstance(name, str), "name must be a string")
    group_order = _positive_int(doc["group_order"], "group_order")

    classes_raw = doc["classes"]
    _require(isinstance(classes_raw, list) and classes_raw, "classes must be a non-empty list")
    seen: dict[str, dict] = {}
    for raw in classes_raw:
        _require(isinstance(raw, dict), f"class entry must be an object, got {raw!r}")
        cname = raw.get("name")
        _require(isinstance(cname, str) and cname != "", "class without a name")
        _require(cname not in seen, f"duplicate class name {cname!r}")
        seen[cname] = raw

    orders = {c: _positive_int(r.get("element_order"), f"class {c}: element_order")
              for c, r in seen.items()}
    exponent = 1
    for o in orders.values():
        exponent = lcm(exponent, o)
    primes = prime_factors(exponent)

    classes = []
    for cname, raw in seen.items():
        order = orders[cname]
        cent = _positive_int(raw.get("centralizer_order"), f"class {cname}: centralizer_order")
        _require(group_order % order == 0,
                 f"class {cname}: element order {order} does not divide group order")
        _require(group_order % cent == 0,
                 f"class {cname}: centralizer order {cent} does not divide group order")
        pm_raw = raw.get("powermap", {})
        _require(isinstance(pm_raw, dict), f"class {cname}: powermap must be an object")
        powermap = {}
        for key, target in pm_raw.items():
            try:
                p = int(key)
            except ValueError:
                raise TableError(f"class {cname}: bad powermap key {key!r}") from None
            _require(target in seen, f"class {cname}: unknown class reference {target!r}")
            want = order // gcd(p, order)
            _require(orders[target] == want,
                     f"class {cname}: {p}-th power {target!r} has order {orders[target]}, "
                     f"expected {want}")
            powermap[p] = target
        for p in primes:
            _require(p in powermap, f"class {cname}: missing powermap entry for prime {p}")
        classes.append(ConjClass(cname, order, cent, powermap))

    identities = [c.name for c in classes if c.element_order == 1]
    _require(len(identities) == 1, "exactly one class of element order 1 is required")
    identity = identities[0]
    names = [c.name for c in classes]

    ordinary_raw = doc["ordinary"]
    _require(isinstance(ordinary_raw, list), "ordinary must be a list")
    ordinary = tuple(_parse_character(r, names, orders, identity, None) for r in ordinary_raw)
    _require(len(ordinary) == len(classes),
             f"{len(ordinary)} ordinary characters for {len(classes)} classes")
    _require(len({c.name for c in ordinary}) == len(ordinary), "duplicate ordinary character name")

    brauer = []
    for raw in doc.get("brauer", []):
        _require(isinstance(raw, dict), "brauer entry must be an object")
        p = raw.get("prime")
        _require(isinstance(p, int) and p > 1 and prime_factors(p) == [p],
                 f"brauer table prime {p!r} is not a prime")
        _require(group_order % p == 0, f"brauer prime {p} does not divide group order")
        _require(all(t.prime != p for t in brauer), f"duplicate brauer table for prime {p}")
        regular = tuple(n for n in names if orders[n] % p)
        chars = tuple(_parse_character(r, regular, orders, identity, p)
                      for r in raw.get("characters", []))
        brauer.append(BrauerTable(p, regular, chars))

    return GroupData(name, group_order, tuple(classes), ordinary, tuple(brauer))


def load_bundled(name: str = "a6") -> GroupData:
    """Load one of the tables shipped in ``helpsolver/data``."""
    text = resources.files("helpsolver").joinpath("data", f"{name}.json").read_text()
    return parse_group_data(text)


# -- queries -----------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    cls: str
    expected: int
    found: Fraction | Cyclotomic

    def __str__(self):
        return f"column {self.cls}: sum |chi|^2 = {self.found}, centralizer order {self.expected}"


def validate_orthogonality(g: GroupData) -> list[Violation]:
    """Check column orthogonality of the ordinary table against the centralizer orders."""
    out = []
    for c in g.classes:
        total = Cyclotomic.rational(0)
        for chi in g.ordinary:
            v = chi(c.name)
            total = total + v * v.conj()
        q = total.as_rational()
        if q != c.centralizer_order:
            out.append(Violation(c.name, c.centralizer_order, q if q is not None else total))
    return out


def _galois_class(g: GroupData, cls: str, j: int) -> str:
    """The class of x^j for j coprime to ord(x), found from the table columns."""
    order = g.order_of(cls)
    want = [chi(cls).galois(j) for chi in g.ordinary]
    for c in g.classes:
        if c.element_order == order and [chi(c.name) for chi in g.ordinary] == want:
            return c.name
    raise TableError(f"no class matches the {j}-th power of {cls}")


def power_class(g: GroupData, cls: str, d: int) -> str:
    """Class of x^d for x in ``cls``."""
    order = g.order_of(cls)
    d %= order
    if d == 0:
        return g.identity
    current = cls
    for p in prime_factors(d):
        while d % p == 0:
            d //= p
            pm = g.by_name[current].powermap
            if p in pm:
                current = pm[p]
            else:
                current = _galois_class(g, current, p)
    return current


def p_regular_classes(g: GroupData, p: int) -> list[str]:
    if p < 2 or g.group_order % p:
        raise TableError(f"{p} does not divide the group order {g.group_order}")
    return [c.name for c in g.classes if c.element_order % p]
