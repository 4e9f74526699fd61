"""Recursive enumeration of admissible partial augmentations, order by order."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

from .bounds import Box, UnboundedError, bound_box
from .constraints import (
    AugmentationTuple,
    PowerDatum,
    build_rows,
    divisors,
    trivial_tuple,
    variable_space,
)
from .scan import integer_points
from .tables import GroupData, power_class, prime_factors

__all__ = [
    "OrderStats",
    "OrderVerdict",
    "SolutionRecord",
    "Solver",
    "Status",
    "enumerate_power_data",
    "solve_order",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolutionRecord:
    """An admissible tuple for a unit of order n together with the records
    chosen for u^q, one per prime q dividing n (omitted when u^q = 1).

    ``classification`` is the class name for a trivial record, None for an
    exceptional one.
    """

    order: int
    eps: AugmentationTuple
    power_refs: tuple[tuple[int, "SolutionRecord"], ...] = ()
    classification: str | None = None

    @property
    def trivial(self) -> bool:
        return self.classification is not None

    @cached_property
    def powers(self) -> dict[int, AugmentationTuple]:
        """Tuples of u^d for every divisor 1 < d < n."""
        refs = dict(self.power_refs)
        out = {}
        for d in divisors(self.order)[1:-1]:
            q = prime_factors(d)[0]
            rec = refs[q]
            out[d] = rec.eps if d == q else rec.powers[d // q]
        return out

    def datum(self) -> PowerDatum:
        return PowerDatum(self.order, tuple(sorted(self.powers.items())))


class Status(str, Enum):
    NO_SOLUTIONS = "no_solutions"
    TRIVIAL_ONLY = "trivial_only"
    EXCEPTIONAL = "exceptional"


@dataclass(frozen=True)
class OrderStats:
    data: int = 0
    rows: tuple[int, ...] = ()
    boxes: tuple[Box, ...] = ()
    excluded: int = 0


@dataclass(frozen=True)
class OrderVerdict:
    order: int
    trivial: tuple[SolutionRecord, ...] = ()
    exceptional: tuple[SolutionRecord, ...] = ()
    stats: OrderStats = field(default_factory=OrderStats)

    @property
    def status(self) -> Status:
        if self.exceptional:
            return Status.EXCEPTIONAL
        if self.trivial:
            return Status.TRIVIAL_ONLY
        return Status.NO_SOLUTIONS

    @property
    def records(self) -> tuple[SolutionRecord, ...]:
        return self.trivial + self.exceptional


@dataclass(frozen=True)
class _Choice:
    refs: tuple[tuple[int, SolutionRecord], ...]
    datum: PowerDatum


class Solver:
    """Solves orders on demand, memoizing verdicts so that power data can be
    drawn from the records of smaller orders."""

    def __init__(self, g: GroupData, use_brauer: bool = True,
                 max_fallback_bound: int | None = None, backend: str | None = None):
        self.g = g
        self.use_brauer = use_brauer
        self.max_fallback_bound = max_fallback_bound
        self.backend = backend
        self._memo: dict[int, OrderVerdict] = {}

    @property
    def tables_used(self) -> tuple[str, ...]:
        primes = [f"mod {t.prime}" for t in self.g.brauer] if self.use_brauer else []
        return ("ordinary", *primes)

    def orders(self) -> list[int]:
        return divisors(self.g.exponent)[1:]

    def _choices(self, n: int) -> list[_Choice]:
        primes = [q for q in prime_factors(n) if n // q > 1]
        options = [self.solve_order(n // q).records for q in primes]
        out = []
        for combo in itertools.product(*options):
            refs = tuple(zip(primes, combo))
            if not _coherent(refs):
                continue
            record = SolutionRecord(n, AugmentationTuple(()), refs)
            out.append(_Choice(refs, record.datum()))
        return out

    def enumerate_power_data(self, n: int) -> list[PowerDatum]:
        return [c.datum for c in self._choices(n)]

    def _box(self, rows, variables) -> Box:
        try:
            return bound_box(rows, variables)
        except UnboundedError:
            if self.max_fallback_bound is None:
                raise
            b = self.max_fallback_bound
            log.warning("unbounded system for %s; using fallback box [-%d, %d]", variables, b, b)
            return Box(tuple(variables), tuple((-b, b) for _ in variables))

    def solve_order(self, n: int) -> OrderVerdict:
        if n in self._memo:
            return self._memo[n]
        space = variable_space(self.g, n)
        trivial, exceptional = [], []
        rows_count, boxes, excluded = [], [], 0
        choices = self._choices(n)
        for choice in choices:
            rows = build_rows(self.g, n, choice.datum, self.use_brauer)
            box = self._box(rows, space.variables)
            rows_count.append(len(rows))
            boxes.append(box)
            for point in integer_points(rows, box, backend=self.backend):
                eps = AugmentationTuple.from_values(space.variables, point)
                verdict = self._classify(n, eps, choice)
                if verdict is False:
                    excluded += 1
                    continue
                record = SolutionRecord(n, eps, choice.refs, verdict)
                (trivial if record.trivial else exceptional).append(record)
        index = {c.name: i for i, c in enumerate(self.g.classes)}
        trivial.sort(key=lambda r: index[r.classification])
        stats = OrderStats(len(choices), tuple(rows_count), tuple(boxes), excluded)
        result = OrderVerdict(n, tuple(trivial), tuple(exceptional), stats)
        self._memo[n] = result
        log.debug("order %d: %s (%d trivial, %d exceptional)", n, result.status.value,
                  len(trivial), len(exceptional))
        return result

    def _classify(self, n: int, eps: AugmentationTuple, choice: _Choice) -> str | None | bool:
        """Class name if trivial, None if exceptional, False if impossible.

        A unit whose every power has a single nonzero partial augmentation is
        rationally conjugate to a group element, which then must have order n
        and the same powers; anything else of that shape cannot occur.
        """
        cls = eps.concentrated_at()
        if cls is None:
            return None
        if not all(rec.trivial for _, rec in choice.refs):
            return None
        if self.g.order_of(cls) != n:
            return False
        for d, tup in choice.datum.powers:
            if tup != trivial_tuple(self.g, n // d, power_class(self.g, cls, d)):
                return False
        return cls

    def solve_all(self) -> list[OrderVerdict]:
        return [self.solve_order(n) for n in self.orders()]


def _coherent(refs: tuple[tuple[int, SolutionRecord], ...]) -> bool:
    """Records chosen for u^q and u^r must agree on u^(qr)."""
    for (q, rq), (r, rr) in itertools.combinations(refs, 2):
        if rq.order // r == 1:
            continue
        if dict(rq.power_refs)[r] != dict(rr.power_refs)[q]:
            return False
    return True


def enumerate_power_data(g: GroupData, n: int, memo: Solver | None = None) -> list[PowerDatum]:
    solver = memo if memo is not None else Solver(g)
    return solver.enumerate_power_data(n)


def solve_order(g: GroupData, n: int, use_brauer: bool = True) -> OrderVerdict:
    return Solver(g, use_brauer).solve_order(n)
