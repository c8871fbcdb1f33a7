"""Acceptance gate: the headline dimension results and the supporting
identities, each reported as a single PASS/FAIL line.

Every check is exact rational arithmetic; there are no tolerances.
"""

from fractions import Fraction

from krvlab.derivations import from_trace, is_symplectic
from krvlab.free_assoc import NcPoly, ad_action
from krvlab.free_lie import dynkin_project, flspace_basis, flspace_dimension
from krvlab.kv_algebra import delta, divergence, krv_component
from krvlab.poly_model import (even_solutions_dim, model_dimension,
                               weight3_tree_dim)
from krvlab.trace_space import partial_trace
from krvlab.verify import run_suite

SEED = 20260825


def _report(tag: str, ok: bool, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'}  {tag}"
    if detail and not ok:
        line += f"  [{detail}]"
    print(line)
    assert ok, line


def _floor_formula(j: int) -> int:
    return (j - 1) // 2 - (j - 1) // 3


def test_criterion_1_weight_two_dimensions():
    got = {j: krv_component(2, j).dimension for j in range(1, 13)}
    want = {j: (1 if j % 2 == 0 else 0) for j in range(1, 13)}
    _report("criterion 1: weight-2 kernel dims, j = 1..12 "
            "(1 for even j, 0 for odd j)", got == want,
            f"got {got}")


def test_criterion_2_weight_three_dimensions():
    bad = []
    for j in range(1, 13):
        if j % 2 == 0:
            want = 0
            if j > 12:
                continue
        else:
            if j > 11:
                continue
            want = _floor_formula(j)
        got = krv_component(3, j).dimension
        if got != want:
            bad.append((j, got, want))
    _report("criterion 2: weight-3 kernel dims, even j <= 12 zero, "
            "odd j <= 11 floor((j-1)/2) - floor((j-1)/3)", not bad, str(bad))


def test_criterion_3_tree_dimension_formula():
    bad = [(m, flspace_dimension(3, m), weight3_tree_dim(m))
           for m in range(1, 13)
           if flspace_dimension(3, m) != weight3_tree_dim(m)]
    formula_bad = [m for m in range(0, 201)
                   if weight3_tree_dim(m) != max(0, _floor_formula(m))]
    _report("criterion 3: tree-space dims (3, m) match the 2a+3b = m-3 "
            "count for m <= 12, and the count matches the floor formula "
            "for m <= 200", not bad and not formula_bad,
            f"dims {bad}, formula {formula_bad}")


def test_criterion_4_delta_generators():
    bad = []
    for n in range(1, 6):
        element = delta(2 * n)
        u = from_trace(element)
        target = NcPoly.gen("x")
        for _ in range(2 * n):
            target = ad_action(NcPoly.gen("y"), target)
        ok = (is_symplectic(u)
              and divergence(u).is_zero()
              and u.image("y") == target.scale(Fraction(-2)))
        if not ok:
            bad.append(2 * n)
    _report("criterion 4: delta_{2n} for n = 1..5 is symplectic, "
            "divergence-free, with u(y) = -2 ad_y^{2n}(x)", not bad,
            f"failing subscripts {bad}")


def test_criterion_5_even_rigidity():
    bad = [d for d in range(2, 21, 2) if even_solutions_dim(d) != 0]
    _report("criterion 5: even-degree polynomial solutions vanish "
            "for d <= 20", not bad, f"nonzero at {bad}")


def test_criterion_6_cross_pipeline_agreement():
    rows = [(d, model_dimension(d), krv_component(3, d).dimension)
            for d in range(3, 12)]
    bad = [row for row in rows if row[1] != row[2]]
    _report("criterion 6: polynomial-model dims equal divergence-kernel "
            "dims for 3 <= d <= 11", not bad, str(bad))


def test_criterion_7_property_suites():
    failures = []
    for suite in ("leibniz", "euler", "cocycle", "roundtrip", "smallwheels"):
        report = run_suite(suite, seed=SEED, cases=50)
        if len(report.cases) < 50 or not report.passed:
            failures.append((suite, [c.name for c in report.failures]))
    crosscheck = run_suite("crosscheck", seed=SEED, cases=50)
    if not crosscheck.passed:
        failures.append(("crosscheck",
                         [c.name for c in crosscheck.failures]))
    _report("criterion 7: seeded property suites, 50 cases each, "
            "zero failures (Leibniz, Euler, cocycle + delta closure, "
            "roundtrip, small wheels + divergence agreement, crosscheck)",
            not failures, str(failures))


def test_criterion_8_partials_stay_in_the_lie_algebra():
    bad = []
    for i in range(1, 4):
        for j in range(1, 11 - i):
            if i + j < 2:
                continue
            for index, element in enumerate(flspace_basis(i, j)):
                for gen in "xy":
                    partial = partial_trace(element.value, gen)
                    if dynkin_project(partial) is None:
                        bad.append((i, j, index, gen))
    _report("criterion 8: trace partials of every tree-space basis element "
            "(x-degree <= 3, total <= 10) pass the Dynkin membership "
            "oracle", not bad, str(bad))
