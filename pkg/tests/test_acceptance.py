"""One check per acceptance criterion; a summary line for each is printed
at the end of the run."""

import random
from fractions import Fraction

import pytest

import conftest
from helpsolver.constraints import (
    PowerDatum,
    applicable_characters,
    build_rows,
    divisors,
    trivial_tuple,
)
from helpsolver.cyclotomic import (
    Cyclotomic,
    cyclotomic_polynomial,
    evaluate_polynomial,
    root_of_unity,
    units,
)
from helpsolver.solver import Status
from helpsolver.tables import power_class, validate_orthogonality

from oracles import multiplicities, trace_by_conjugates


def record(number, text, ok):
    conftest.ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {text}")
    assert ok, text


def _tuples(verdict):
    return {r.eps.items for r in verdict.records}


def _t(a, b, c):
    return (("2a", a), ("3a", b), ("3b", c))


def test_criterion_1_a6_case_analysis(a6_solver):
    ok = True
    for n, classes in {2: ["2a"], 3: ["3a", "3b"], 4: ["4a"], 5: ["5a", "5b"]}.items():
        v = a6_solver.solve_order(n)
        ok &= v.status is Status.TRIVIAL_ONLY and [r.classification for r in v.trivial] == classes
    for n in (10, 15):
        ok &= a6_solver.solve_order(n).status is Status.NO_SOLUTIONS
    six = a6_solver.solve_order(6)
    ok &= not six.trivial and len(six.exceptional) == 2
    found = {r.eps.items: (r.powers[2].concentrated_at(), r.powers[3].concentrated_at())
             for r in six.exceptional}
    ok &= found == {_t(-2, 1, 2): ("3a", "2a"), _t(-2, 2, 1): ("3b", "2a")}
    record(1, "A6 orders 2-6, 10, 15 give the expected verdicts", ok)


def test_criterion_2_composite_orders(a6_solver, brute):
    ok = all(a6_solver.solve_order(n).status is Status.NO_SOLUTIONS
             and a6_solver.solve_order(n).stats.data == 0 for n in (20, 30, 60))
    twelve = a6_solver.solve_order(12)
    ok &= twelve.status is Status.NO_SOLUTIONS
    ok &= _tuples(twelve) == brute.tuples(12)
    record(2, "orders 20, 30, 60 vacuous; order 12 has no solutions, agreeing with brute force", ok)


def test_criterion_3_eigenvalue_multiplicities(a6, a6_solver):
    rec = next(r for r in a6_solver.solve_order(6).exceptional
               if r.powers[2].concentrated_at() == "3b")
    rows = build_rows(a6, 6, rec.datum(), dedupe=False)
    point = rec.eps.values
    mu = {r.character: [] for r in rows if r.prime is None}
    for r in rows:
        if r.prime is None:
            mu[r.character].append(r.evaluate(point))
    # exponents of zeta_6: 1 = ^0, zeta_3 = ^2, zeta_3^2 = ^4, -zeta_3 = ^5, -zeta_3^2 = ^1, -1 = ^3
    ok = mu["chi_5a"] == [1, 1, 1, 0, 1, 1] and mu["chi_5b"] == [1, 0, 1, 2, 1, 0]
    profile = {1: rec.eps.as_dict(), **{d: t.as_dict() for d, t in rec.powers.items()}}
    chars = {c.name: c for c in a6.ordinary}
    ok &= multiplicities(chars["chi_5a"], 6, profile) == mu["chi_5a"]
    ok &= multiplicities(chars["chi_5b"], 6, profile) == mu["chi_5b"]
    record(3, "order-6 multiplicities for chi_5a and chi_5b match the diagonal forms", ok)


def _random_cyclotomic(rng, m):
    return Cyclotomic.from_terms(m, [(Fraction(rng.randint(-5, 5), rng.randint(1, 3)), rng.randrange(m))
                                     for _ in range(rng.randint(0, 4))])


def test_criterion_4_property_suite(a6):
    ok = all(evaluate_polynomial(cyclotomic_polynomial(m), root_of_unity(m, 1)) == 0
             for m in range(1, 61))
    rng = random.Random(20240601)
    for _ in range(1000):
        m = rng.choice([3, 4, 5, 7, 8, 9, 12, 15])
        j = rng.choice(units(m))
        a, b = _random_cyclotomic(rng, m), _random_cyclotomic(rng, m)
        ok &= (a * b).galois(j) == a.galois(j) * b.galois(j)
        ok &= (a + b).galois(j) == a.galois(j) + b.galois(j)
        ok &= (a + b).trace() == a.trace() + b.trace()
        ok &= a.galois(j).trace() == a.trace() == trace_by_conjugates(a)
    for cls in [c.name for c in a6.classes if c.element_order > 1]:
        n = a6.order_of(cls)
        datum = PowerDatum(n, tuple((d, trivial_tuple(a6, n // d, power_class(a6, cls, d)))
                                    for d in divisors(n)[1:-1]))
        rows = build_rows(a6, n, datum, dedupe=False)
        point = trivial_tuple(a6, n, cls).values
        for psi in applicable_characters(a6, n):
            mus = [r.evaluate(point) for r in rows
                   if r.character == psi.name and r.prime == psi.prime]
            ok &= sum(mus) == psi.degree
            recon = sum((root_of_unity(n, k) * mu for k, mu in enumerate(mus)), Cyclotomic.rational(0))
            ok &= recon == psi(cls)
    ok &= validate_orthogonality(a6) == []
    ok &= [c.centralizer_order for c in a6.classes] == [360, 8, 9, 9, 4, 5, 5]
    record(4, "cyclotomic, Fourier and orthogonality properties hold exactly", ok)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_criterion_5_oracle_equivalence(a6_solver, brute, n):
    ok = _tuples(a6_solver.solve_order(n)) == brute.tuples(n)
    record(5, f"order {n} solution set equals brute force over [-8, 8]", ok)


def test_criterion_6_monotonicity(a6_solver, a6_ordinary_solver):
    ok = all(_tuples(a6_solver.solve_order(n)) <= _tuples(a6_ordinary_solver.solve_order(n))
             for n in a6_solver.orders())
    record(6, "ordinary-only solution sets contain the Brauer-refined ones", ok)
