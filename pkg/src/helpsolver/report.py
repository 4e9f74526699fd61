"""Text and JSON rendering of solver results."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .solver import OrderVerdict, SolutionRecord, Solver, Status
from .tables import GroupData

__all__ = [
    "OrderSummary",
    "Report",
    "SolutionSummary",
    "build_report",
    "full_report",
    "parse_report",
    "render_json",
    "render_text",
]

Pairs = tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class SolutionSummary:
    eps: Pairs
    cls: str | None
    powers: tuple[tuple[int, Pairs], ...]

    @property
    def classification(self) -> str:
        return "exceptional" if self.cls is None else "trivial"


@dataclass(frozen=True)
class OrderSummary:
    n: int
    status: Status
    solutions: tuple[SolutionSummary, ...]
    data: int = 0
    rows: tuple[int, ...] = ()
    boxes: tuple[tuple[tuple[str, int, int], ...] | None, ...] = ()
    excluded: int = 0

    @property
    def trivial(self) -> list[SolutionSummary]:
        return [s for s in self.solutions if s.cls is not None]

    @property
    def exceptional(self) -> list[SolutionSummary]:
        return [s for s in self.solutions if s.cls is None]


@dataclass(frozen=True)
class Report:
    group: str
    classes: tuple[str, ...]
    tables: tuple[str, ...]
    orders: tuple[OrderSummary, ...]

    @property
    def open_exceptions(self) -> int:
        return sum(len(o.exceptional) for o in self.orders)

    @property
    def status(self) -> str:
        return "open" if self.open_exceptions else "verified"

    def order(self, n: int) -> OrderSummary:
        return next(o for o in self.orders if o.n == n)


def _summary(record: SolutionRecord) -> SolutionSummary:
    return SolutionSummary(
        record.eps.items,
        record.classification,
        tuple((d, t.items) for d, t in sorted(record.powers.items())),
    )


def _order_summary(v: OrderVerdict) -> OrderSummary:
    boxes = tuple(
        None if b.empty else tuple((x, lo, hi) for x, (lo, hi) in zip(b.variables, b.bounds))
        for b in v.stats.boxes
    )
    return OrderSummary(v.order, v.status, tuple(_summary(r) for r in v.records),
                        v.stats.data, v.stats.rows, boxes, v.stats.excluded)


def build_report(g: GroupData, verdicts: Iterable[OrderVerdict], tables: Sequence[str]) -> Report:
    return Report(g.name, tuple(c.name for c in g.classes), tuple(tables),
                  tuple(_order_summary(v) for v in sorted(verdicts, key=lambda v: v.order)))


def full_report(g: GroupData, use_brauer: bool = True, **solver_options) -> Report:
    """Solve every order n > 1 dividing the exponent."""
    solver = Solver(g, use_brauer=use_brauer, **solver_options)
    return build_report(g, solver.solve_all(), solver.tables_used)


# -- text --------------------------------------------------------------------


def _pairs(p: Pairs) -> str:
    return "(" + ", ".join(f"{c}:{v}" for c, v in p) + ")"


def render_text(r: Report) -> str:
    lines = [f"group: {r.group}", f"tables: {', '.join(r.tables)}"]
    if not r.orders:
        lines.append("no nontrivial orders")
    for o in r.orders:
        trivial = ", ".join(s.cls for s in o.trivial)
        if o.status is Status.NO_SOLUTIONS:
            lines.append(f"order {o.n}: no solutions")
        elif o.status is Status.TRIVIAL_ONLY:
            lines.append(f"order {o.n}: trivial only ({trivial})")
        else:
            count = len(o.exceptional)
            noun = "solution" if count == 1 else "solutions"
            extra = f"; trivial: {trivial}" if trivial else ""
            lines.append(f"order {o.n}: EXCEPTIONAL ({count} {noun}{extra})")
            for s in o.exceptional:
                powers = ", ".join(f"u^{d} -> {_pairs(t)}" for d, t in s.powers)
                lines.append(f"  {_pairs(s.eps)}" + (f"  powers: {powers}" if powers else ""))
    if r.status == "verified":
        lines.append("status: verified")
    else:
        lines.append(f"status: open ({r.open_exceptions} exceptional solutions)")
    return "\n".join(lines) + "\n"


# -- JSON --------------------------------------------------------------------


def _report_doc(r: Report) -> dict:
    orders = []
    for o in r.orders:
        orders.append({
            "n": o.n,
            "status": o.status.value,
            "solutions": [
                {
                    "tuple": dict(s.eps),
                    "classification": s.classification,
                    "class": s.cls,
                    "powers": {str(d): dict(t) for d, t in s.powers},
                }
                for s in o.solutions
            ],
            "stats": {
                "data": o.data,
                "rows": list(o.rows),
                "boxes": [None if b is None else {x: [lo, hi] for x, lo, hi in b}
                          for b in o.boxes],
                "excluded": o.excluded,
            },
        })
    return {
        "group": r.group,
        "classes": list(r.classes),
        "tables": list(r.tables),
        "status": r.status,
        "open_exceptions": r.open_exceptions,
        "orders": orders,
    }


def render_json(r: Report) -> str:
    return json.dumps(_report_doc(r), sort_keys=True, indent=2) + "\n"


def parse_report(text: str) -> Report:
    """Inverse of :func:`render_json`."""
    doc = json.loads(text)
    classes = tuple(doc["classes"])
    index = {c: i for i, c in enumerate(classes)}

    def pairs(d: dict) -> Pairs:
        return tuple(sorted(((c, int(v)) for c, v in d.items()), key=lambda p: index[p[0]]))

    orders = []
    for o in doc["orders"]:
        sols = tuple(
            SolutionSummary(
                pairs(s["tuple"]),
                s["class"],
                tuple(sorted((int(d), pairs(t)) for d, t in s["powers"].items())),
            )
            for s in o["solutions"]
        )
        stats = o["stats"]
        boxes = tuple(
            None if b is None else tuple(
                sorted(((x, lo, hi) for x, (lo, hi) in b.items()), key=lambda t: index[t[0]]))
            for b in stats["boxes"]
        )
        orders.append(OrderSummary(o["n"], Status(o["status"]), sols, stats["data"],
                                   tuple(stats["rows"]), boxes, stats["excluded"]))
    return Report(doc["group"], classes, tuple(doc["tables"]), tuple(orders))
