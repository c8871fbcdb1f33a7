"""Seeded property suites over the library's structural identities.

Each suite draws its inputs from a deterministic generator, runs one
check per case and reports every case with its outcome.  The suites:

* ``leibniz``     tensor-valued and derivation Leibniz rules
* ``euler``       the three Euler identities (algebra, trace, marking)
* ``cocycle``     divergence 1-cocycle identity and delta bracket closure
* ``roundtrip``   trace <-> derivation in both directions, parse/render
* ``smallwheels`` vanishing divergence at low x-degree; the two
                  divergence formulas agree
* ``crosscheck``  kernel dimensions vs. the polynomial model
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from . import expressions
from .derivations import (Derivation, apply, bracket_der, act_on_trace,
                          from_trace, is_symplectic, to_trace)
from .free_assoc import (NcPoly, TensorPoly, diamond, diamond_bimodule, mul,
                         partial_assoc)
from .free_lie import (FLElement, bracket, flspace_basis, lie_from_ncpoly,
                       lyndon_bracket, partial_lie)
from .kv_algebra import (delta, divergence, divergence_star,
                         expected_dimension, krv_component)
from .poly_model import model_dimension
from .trace_space import TracePoly, euler_trace_check, tr


@dataclass
class CaseResult:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    seed: int
    cases: list[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(case.ok for case in self.cases)

    @property
    def failures(self) -> list[CaseResult]:
        return [case for case in self.cases if not case.ok]


# ------------------------------------------------------------ generators

def random_word(rng: random.Random, lo: int = 1, hi: int = 5) -> str:
    return "".join(rng.choice("xy") for _ in range(rng.randint(lo, hi)))


def random_fraction(rng: random.Random) -> Fraction:
    num = rng.choice([-3, -2, -1, 1, 2, 3])
    return Fraction(num, rng.randint(1, 3))


def random_ncpoly(rng: random.Random, terms: int = 3, lo: int = 1,
                  hi: int = 4) -> NcPoly:
    out = NcPoly.zero()
    for _ in range(terms):
        out = out + NcPoly.from_word(random_word(rng, lo, hi)).scale(
            random_fraction(rng))
    return out


def random_homogeneous(rng: random.Random, deg_x: int, deg_y: int,
                       terms: int = 3) -> NcPoly:
    letters = "x" * deg_x + "y" * deg_y
    pool = sorted({"".join(p) for p in permutations(letters)})
    out = NcPoly.zero()
    for _ in range(min(terms, len(pool))):
        out = out + NcPoly.from_word(rng.choice(pool)).scale(
            random_fraction(rng))
    return out


def random_lie(rng: random.Random, deg_x: int, deg_y: int):
    from .free_lie import lyndon_words_bidegree

    words = lyndon_words_bidegree(deg_x, deg_y)
    out = NcPoly.zero()
    for word in words:
        if rng.random() < 0.6:
            out = out + lyndon_bracket(word).scale(random_fraction(rng))
    if out.is_zero() and words:
        out = lyndon_bracket(rng.choice(words))
    return lie_from_ncpoly(out)


_FL_BIDEGREES = [(1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1),
                 (1, 4), (2, 3), (3, 2), (2, 4), (3, 3)]


def random_fl_element(rng: random.Random,
                      pool: list[tuple[int, int]] = _FL_BIDEGREES
                      ) -> FLElement:
    for _ in range(40):
        i, j = rng.choice(pool)
        basis = flspace_basis(i, j)
        if not basis:
            continue
        out = FLElement.zero()
        for element in basis:
            if rng.random() < 0.7:
                out = out + element.scale(random_fraction(rng))
        if not out.value.is_zero():
            return out
    raise RuntimeError("no nonzero sample found")  # pragma: no cover


# ---------------------------------------------------------------- suites

_LIE_BIDEGREES = [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1)]


def suite_leibniz(seed: int, cases: int) -> SuiteReport:
    rng = random.Random(seed)
    report = SuiteReport("leibniz", seed)
    for k in range(cases):
        which = k % 3
        if which == 0:
            a = random_ncpoly(rng)
            b = random_ncpoly(rng)
            gen = "x" if k % 2 == 0 else "y"
            lhs = partial_assoc(mul(a, b), gen)
            rhs = partial_assoc(a, gen).right_mul(b) \
                + partial_assoc(b, gen).left_mul(a)
            report.cases.append(CaseResult(
                f"assoc-{gen}-{k}", lhs == rhs,
                "dA(ab) = dA(a).b + a.dA(b)"))
        elif which == 1:
            l = random_lie(rng, *rng.choice(_LIE_BIDEGREES))
            m = random_lie(rng, *rng.choice(_LIE_BIDEGREES))
            gen = "x" if k % 2 == 0 else "y"
            lhs = partial_lie(bracket(l, m), gen)
            rhs = mul(l.embedding, partial_lie(m, gen)) \
                - mul(m.embedding, partial_lie(l, gen))
            report.cases.append(CaseResult(
                f"lie-{gen}-{k}", lhs == rhs,
                "dL([l,m]) = l dL(m) - m dL(l)"))
        else:
            u = from_trace(random_fl_element(rng))
            a = random_ncpoly(rng, terms=2)
            b = random_ncpoly(rng, terms=2)
            lhs = apply(u, mul(a, b))
            rhs = mul(apply(u, a), b) + mul(a, apply(u, b))
            report.cases.append(CaseResult(
                f"derivation-{k}", lhs == rhs,
                "u(ab) = u(a)b + a u(b)"))
    return report


def suite_euler(seed: int, cases: int) -> SuiteReport:
    rng = random.Random(seed)
    report = SuiteReport("euler", seed)
    shapes = [(i, j) for i in range(4) for j in range(4) if 0 < i + j <= 6]
    for k in range(cases):
        i, j = rng.choice(shapes)
        a = random_homogeneous(rng, i, j)
        which = k % 3
        if which == 0:
            ok = (diamond(partial_assoc(a, "x"), NcPoly.gen("x"))
                  == a.scale(Fraction(i))
                  and diamond(partial_assoc(a, "y"), NcPoly.gen("y"))
                  == a.scale(Fraction(j)))
            report.cases.append(CaseResult(
                f"algebra-{k}", ok, f"dA(a) diamond gen = deg*a at ({i},{j})"))
        elif which == 1:
            f = tr(a)
            if f.is_zero():
                ok = True
            else:
                try:
                    euler_trace_check(f)
                    ok = True
                except ArithmeticError:
                    ok = False
            report.cases.append(CaseResult(
                f"trace-{k}", ok, f"tr(dF(f)*gen) = deg*f at ({i},{j})"))
        else:
            b = random_ncpoly(rng)
            lhs = TensorPoly.zero()
            for gen in "xy":
                g = NcPoly.gen(gen)
                marker = TensorPoly.of(g, NcPoly.one()) \
                    - TensorPoly.of(NcPoly.one(), g)
                lhs = lhs + diamond_bimodule(partial_assoc(b, gen), marker)
            rhs = TensorPoly.of(b, NcPoly.one()) \
                - TensorPoly.of(NcPoly.one(), b)
            report.cases.append(CaseResult(
                f"marking-{k}", lhs == rhs,
                "sum dA_g(a) diamond (g@1 - 1@g) = a@1 - 1@a"))
    return report


def suite_cocycle(seed: int, cases: int) -> SuiteReport:
    rng = random.Random(seed)
    report = SuiteReport("cocycle", seed)
    u2 = from_trace(delta(2))
    u4 = from_trace(delta(4))
    w = bracket_der(u2, u4)
    closure_ok = (divergence(w).is_zero() and is_symplectic(w))
    report.cases.append(CaseResult(
        "delta-bracket-closure", closure_ok,
        "div([phi(delta_2), phi(delta_4)]) = 0"))
    small = [(1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1)]
    while len(report.cases) < cases:
        u = from_trace(random_fl_element(rng, small))
        v = from_trace(random_fl_element(rng, small))
        lhs = divergence(bracket_der(u, v))
        rhs = act_on_trace(u, divergence(v)) - act_on_trace(v, divergence(u))
        report.cases.append(CaseResult(
            f"cocycle-{len(report.cases)}", lhs == rhs,
            "div([u,v]) = u.div(v) - v.div(u)"))
    return report


_ROUNDTRIP_SOURCES = [
    "x*y - 2*y*x + 5", "[x,[x,y]]", "tr(x*y) + 3*tr(x*x*y)",
    "theta(x; [[x,y],y])", "x@y - 1/3*(y@x)", "dA_y(x*y*y)", "delta(4)",
    "-7/2", "dF_x(tr(x*y*x*y))", "div(delta(2))",
]


def suite_roundtrip(seed: int, cases: int) -> SuiteReport:
    rng = random.Random(seed)
    report = SuiteReport("roundtrip", seed)
    for k in range(cases):
        which = k % 3
        if which == 0:
            f = random_fl_element(rng)
            u = from_trace(f)
            report.cases.append(CaseResult(
                f"trace-to-der-{k}", to_trace(u) == f.value,
                "to_trace(from_trace(f)) = f"))
        elif which == 1:
            u = from_trace(random_fl_element(rng))
            v = from_trace(to_trace(u))
            ok = (v.image("x") == u.image("x")
                  and v.image("y") == u.image("y"))
            report.cases.append(CaseResult(
                f"der-to-trace-{k}", ok,
                "from_trace(to_trace(u)) = u"))
        else:
            source = rng.choice(_ROUNDTRIP_SOURCES)
            value = expressions.evaluate_source(source)
            rendered = expressions.render_value(value)
            again = expressions.evaluate_source(rendered)
            report.cases.append(CaseResult(
                f"parse-render-{k}",
                expressions.values_equivalent(value, again),
                f"parse(render(.)) identity on {rendered!r}"))
    return report


_WHEEL_BIDEGREES = [(i, j) for i in (1, 2, 3) for j in range(1, 10)
                    if (i + j) % 2 == 0 and i + j <= 10]


def suite_smallwheels(seed: int, cases: int) -> SuiteReport:
    rng = random.Random(seed)
    report = SuiteReport("smallwheels", seed)
    for k in range(cases):
        if k % 2 == 0:
            f = random_fl_element(rng, _WHEEL_BIDEGREES)
            value = divergence(from_trace(f))
            report.cases.append(CaseResult(
                f"vanishing-{k}", value.is_zero(),
                "div = 0 at x-degree <= 3, even total degree"))
        else:
            f = random_fl_element(rng)
            lhs = divergence(from_trace(f))
            rhs = divergence_star(f)
            report.cases.append(CaseResult(
                f"star-agreement-{k}", lhs == rhs,
                "div(u) = tr(g - g*)"))
    return report


def suite_crosscheck(seed: int, cases: int) -> SuiteReport:
    report = SuiteReport("crosscheck", seed)
    for d in range(3, 12):
        lhs = model_dimension(d)
        rhs = krv_component(3, d).dimension
        report.cases.append(CaseResult(
            f"weight3-degree-{d}", lhs == rhs,
            f"polynomial model {lhs} vs kernel {rhs}"))
    for j in range(1, 9):
        got = krv_component(2, j).dimension
        want = expected_dimension(2, j)
        report.cases.append(CaseResult(
            f"weight2-j-{j}", got == want,
            f"kernel {got} vs closed form {want}"))
    return report


SUITES = {
    "leibniz": suite_leibniz,
    "euler": suite_euler,
    "cocycle": suite_cocycle,
    "roundtrip": suite_roundtrip,
    "smallwheels": suite_smallwheels,
    "crosscheck": suite_crosscheck,
}


def run_suite(name: str, seed: int = 0, cases: int = 25) -> SuiteReport:
    if name not in SUITES:
        known = ", ".join(sorted(SUITES))
        raise ValueError(f"unknown suite {name!r} (choose from: {known})")
    if cases < 1:
        raise ValueError("cases must be positive")
    return SUITES[name](seed, cases)
