"""Acceptance suite: nine numbered criteria, each printing one PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.  Every
expected value here is recomputed from transcribed closed forms or classical
evaluation, never from the code under test.
"""

import io
import random
import time
from contextlib import redirect_stdout
from itertools import product
from math import fsum

from vennlogic import (
    ITF,
    TFI,
    TIF,
    Assignment,
    BOOL_OPS,
    BinOp,
    Component,
    ComponentVector,
    Const,
    NeutrosophicValue,
    Not,
    OperatorSpec,
    Part,
    Var,
    cli,
    compile_expr,
    compose,
    evaluate_bool,
    fuzzy_operator_eval,
    fuzzy_part_value,
    knuth_registry,
    neutro_conj,
    neutro_disj_disjoint,
    neutro_operator_eval,
    parse,
    render,
)

TOL12 = 1e-12

# classical connectives in catalog row order, for corner checks
ROW_FUNCS = (
    lambda x, y: False,
    lambda x, y: x and y,
    lambda x, y: x and not y,
    lambda x, y: x,
    lambda x, y: (not x) and y,
    lambda x, y: y,
    lambda x, y: x != y,
    lambda x, y: x or y,
    lambda x, y: not (x or y),
    lambda x, y: x == y,
    lambda x, y: not y,
    lambda x, y: x or not y,
    lambda x, y: not x,
    lambda x, y: (not x) or y,
    lambda x, y: not (x and y),
    lambda x, y: True,
)


def _report(number: int, detail: str, elapsed: float | None = None) -> None:
    timing = f" ({elapsed:.2f} s)" if elapsed is not None else ""
    print(f"ACCEPTANCE {number} PASS: {detail}{timing}")


def _normalized_triple(rng: random.Random) -> tuple[float, float, float]:
    lo, hi = sorted((rng.random(), rng.random()))
    return lo, hi - lo, 1.0 - hi


def _random_ast(rng: random.Random, names, depth: int):
    if depth == 0 or rng.random() < 0.25:
        if rng.random() < 0.12:
            return Const(rng.random() < 0.5)
        return Var(rng.choice(names))
    if rng.random() < 0.25:
        return Not(_random_ast(rng, names, depth - 1))
    op = rng.choice(sorted(BOOL_OPS))
    return BinOp(
        op, _random_ast(rng, names, depth - 1), _random_ast(rng, names, depth - 1)
    )


def test_01_binary_table_on_grid():
    grid = [i / 10 for i in range(11)]
    start = time.perf_counter()
    worst = 0.0
    for op in knuth_registry():
        for t1 in grid:
            for t2 in grid:
                a = Assignment.fuzzy(("x", "y"), (t1, t2))
                got = fuzzy_operator_eval(op.spec, a).t
                want = op.truth_poly(t1, t2)
                worst = max(worst, abs(got - want))
                assert abs(got - want) <= TOL12, (op.display_name, t1, t2)
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    _report(1, f"16 operators x 121 grid points, max error {worst:.2e} <= 1e-12", elapsed)


def test_02_boolean_corner_agreement():
    start = time.perf_counter()
    for row, op in zip(ROW_FUNCS, knuth_registry()):
        for p in range(4):
            x, y = bool(p & 1), bool(p >> 1 & 1)
            a = Assignment.fuzzy(("x", "y"), (float(x), float(y)))
            got = fuzzy_operator_eval(op.spec, a)
            assert got.t in (0.0, 1.0) and got.f in (0.0, 1.0)
            assert got.t == float(row(x, y))
            assert got.f == 1.0 - got.t
    rng = random.Random(20260814)
    names = ("x", "y", "z")
    for _ in range(512):
        shaded = rng.randrange(1 << 8)
        spec = OperatorSpec(3, shaded)
        for p in range(8):
            a = Assignment.fuzzy(names, tuple(float(p >> i & 1) for i in range(3)))
            got = fuzzy_operator_eval(spec, a)
            assert got.t in (0.0, 1.0) and got.f in (0.0, 1.0)
            assert got.t == float(shaded >> p & 1)
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    _report(2, "16x4 catalog corners and 512 ternary specs x 8 corners, exact", elapsed)


def test_03_partition_of_unity():
    start = time.perf_counter()
    rng = random.Random(314159)
    worst = 0.0
    for n in (2, 3, 4, 5):
        names = tuple(f"v{i}" for i in range(n))
        for _ in range(200):
            a = Assignment.fuzzy(names, [rng.random() for _ in range(n)])
            total = fsum(fuzzy_part_value(Part(n, m), a).t for m in range(1 << n))
            worst = max(worst, abs(total - 1.0))
            assert abs(total - 1.0) <= 1e-9
    # the four-part full union collapses to (1, 0)
    for _ in range(50):
        a = Assignment.fuzzy(("x", "y"), (rng.random(), rng.random()))
        full = fuzzy_operator_eval(OperatorSpec(2, 0b1111), a)
        assert abs(full.t - 1.0) <= 1e-9 and abs(full.f) <= 1e-9
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    _report(3, f"partition sums for n=2..5, max |sum-1| {worst:.2e} <= 1e-9; "
               "full union = (1, 0)", elapsed)


def test_04_conjunction_oracle_equivalence():
    start = time.perf_counter()
    from vennlogic import oracle_expand

    rng = random.Random(271828)
    worst = 0.0
    for k in (2, 3, 4, 5):
        for _ in range(200):
            values = [
                NeutrosophicValue(rng.random(), rng.random(), rng.random())
                for _ in range(k)
            ]
            for order in (TIF, ITF, TFI):
                got = neutro_conj(values, order)
                want = oracle_expand(values, order)
                err = max(
                    abs(got.T - want.T), abs(got.I - want.I), abs(got.F - want.F)
                )
                worst = max(worst, err)
                assert err <= TOL12

    # transcribed two-variable closed forms, term for term
    def prudent(a, b):
        (T1, I1, F1), (T2, I2, F2) = a, b
        return (
            T1 * T2,
            I1 * I2 + I1 * T2 + T1 * I2,
            F1 * F2 + F1 * I2 + F1 * T2 + F2 * T1 + F2 * I1,
        )

    def optimistic(a, b):
        (T1, I1, F1), (T2, I2, F2) = a, b
        return (
            T1 * T2 + T1 * I2 + T2 * I1,
            I1 * I2,
            F1 * F2 + F1 * I2 + F1 * T2 + F2 * T1 + F2 * I1,
        )

    for _ in range(20):
        a = (rng.random(), rng.random(), rng.random())
        b = (rng.random(), rng.random(), rng.random())
        va, vb = NeutrosophicValue(*a), NeutrosophicValue(*b)
        for order, closed in ((TIF, prudent), (ITF, optimistic)):
            got = neutro_conj([va, vb], order)
            want = closed(a, b)
            assert abs(got.T - want[0]) <= TOL12
            assert abs(got.I - want[1]) <= TOL12
            assert abs(got.F - want[2]) <= TOL12
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    _report(4, f"conjunction vs expansion oracle, k=2..5 x 200 x 3 orders, "
               f"max error {worst:.2e} <= 1e-12; both closed forms match", elapsed)


def test_05_binary_catalog_three_component_rows():
    start = time.perf_counter()

    def cN(a, b):
        (T1, I1, F1), (T2, I2, F2) = a, b
        return (
            T1 * T2,
            I1 * I2 + I1 * T2 + T1 * I2,
            F1 * F2 + F1 * I2 + F1 * T2 + F2 * T1 + F2 * I1,
        )

    def nN(a):
        return a[2], a[1], a[0]

    def dN2(a, b, tau):
        t = a[0] + b[0]
        den = a[1] + b[1] + a[2] + b[2]
        scale = (tau - t) / den
        return t, (a[1] + b[1]) * scale, (a[2] + b[2]) * scale

    rng = random.Random(6626)
    worst = 0.0
    for _ in range(100):
        xv = _normalized_triple(rng)
        yv = _normalized_triple(rng)
        a = Assignment.neutrosophic(("x", "y"), (xv, yv))
        tau = sum(xv) * sum(yv)
        p12, p1 = cN(xv, yv), cN(xv, nN(yv))
        p2, p0 = cN(nN(xv), yv), cN(nN(xv), nN(yv))
        xor = dN2(p1, p2, tau)
        expected = (
            (0.0, 0.0, 1.0),
            p12,
            p1,
            xv,
            p2,
            yv,
            xor,
            nN(p0),
            p0,
            nN(xor),
            nN(yv),
            nN(p2),
            nN(xv),
            nN(p1),
            nN(p12),
            (1.0, 0.0, 0.0),
        )
        for op, want in zip(knuth_registry(), expected):
            got = neutro_operator_eval(op.spec, a, TIF)
            err = max(
                abs(got.T - want[0]), abs(got.I - want[1]), abs(got.F - want[2])
            )
            worst = max(worst, err)
            assert err <= TOL12, op.display_name
    elapsed = time.perf_counter() - start
    assert elapsed < 2.0
    _report(5, f"16 catalog rows vs transcribed closed forms x 100 assignments, "
               f"max error {worst:.2e} <= 1e-12", elapsed)


def test_06_trinary_part_polynomials():
    closed_forms = {
        0b111: lambda t1, t2, t3: t1 * t2 * t3,
        0b011: lambda t1, t2, t3: t1 * t2 - t1 * t2 * t3,
        0b101: lambda t1, t2, t3: t1 * t3 - t1 * t2 * t3,
        0b110: lambda t1, t2, t3: t2 * t3 - t1 * t2 * t3,
        0b001: lambda t1, t2, t3: t1 - t1 * t2 - t1 * t3 + t1 * t2 * t3,
        0b010: lambda t1, t2, t3: t2 - t1 * t2 - t2 * t3 + t1 * t2 * t3,
        0b100: lambda t1, t2, t3: t3 - t1 * t3 - t2 * t3 + t1 * t2 * t3,
        0b000: lambda t1, t2, t3: 1 - t1 - t2 - t3
        + t1 * t2 + t1 * t3 + t2 * t3 - t1 * t2 * t3,
    }
    rng = random.Random(1662607)
    worst = 0.0
    for _ in range(200):
        ts = (rng.random(), rng.random(), rng.random())
        a = Assignment.fuzzy(("x", "y", "z"), ts)
        for mask, poly in closed_forms.items():
            got = fuzzy_part_value(Part(3, mask), a).t
            err = abs(got - poly(*ts))
            worst = max(worst, err)
            assert err <= TOL12, mask
    _report(6, f"8 three-variable part polynomials x 200 samples, "
               f"max error {worst:.2e} <= 1e-12")


def test_07_disjoint_union_norm():
    rng = random.Random(57721)
    worst = 0.0
    for _ in range(200):
        k = rng.randint(2, 5)
        raw = [rng.random() + 1e-9 for _ in range(k)]
        truth_mass = rng.random()
        values = [
            NeutrosophicValue(
                truth_mass * r / sum(raw), rng.random(), rng.random()
            )
            for r in raw
        ]
        tau = truth_mass + 2.0 * rng.random()
        got = neutro_disj_disjoint(values, tau)
        err = abs(got.norm() - tau)
        worst = max(worst, err)
        assert err <= TOL12
    degenerate = neutro_disj_disjoint(
        [NeutrosophicValue(0.25, 0.0, 0.0), NeutrosophicValue(0.5, 0.0, 0.0)], 1.0
    )
    assert degenerate == NeutrosophicValue(0.75, 0.0, 0.0)
    _report(7, f"200 disjoint unions keep norm = tau, max error {worst:.2e} "
               "<= 1e-12; degenerate branch returns (sum T, 0, 0)")


def test_08_composition_law_identities():
    rng = random.Random(141421)
    worst = 0.0
    for k in (1, 2, 3, 4, 5):
        for _ in range(40):
            values = [
                NeutrosophicValue(rng.random(), rng.random(), rng.random())
                for _ in range(k)
            ]
            # completeness: the seven bucket sums exhaust the product of norms
            got = neutro_conj(values).norm()
            target = 1.0
            for v in values:
                target *= v.norm()
            worst = max(worst, abs(got - target))
            assert abs(got - target) <= TOL12
            # argument permutation symmetry, exact by canonical ordering
            vectors = [
                ComponentVector(c, tuple(getattr(v, c.value) for v in values))
                for c in (Component.T, Component.I, Component.F)
            ]
            reference = compose(vectors)
            for perm in ((2, 1, 0), (1, 2, 0), (0, 2, 1)):
                assert compose([vectors[i] for i in perm]) == reference
    # printed k=3 expansions have six terms each; unit entries count terms
    ones = (1.0, 1.0, 1.0)
    t = ComponentVector(Component.T, ones)
    i = ComponentVector(Component.I, ones)
    f = ComponentVector(Component.F, ones)
    assert compose([t, i]) == 6.0
    assert compose([t, f]) == 6.0
    assert compose([i, f]) == 6.0
    assert compose([t, i, f]) == 6.0
    _report(8, f"completeness and permutation symmetry for k<=5, max error "
               f"{worst:.2e} <= 1e-12; k=3 expansions have 6 terms each")


def test_09_parser_codification_round_trip():
    rng = random.Random(42424242)
    names4 = ("x", "y", "z", "w")
    for _ in range(1000):
        n = rng.randint(1, 4)
        e = _random_ast(rng, names4[:n], depth=4)
        assert parse(render(e)) == e
    # exhaustive compile soundness at n=2: every one of the 16 shadings,
    # rebuilt as a disjunction of its parts, compiles back to itself
    for shaded in range(16):
        spec = OperatorSpec(2, shaded)
        clauses = []
        for part in spec.shaded_parts():
            lits = [
                Var(name) if part.contains(i + 1) else Not(Var(name))
                for i, name in enumerate(("x", "y"))
            ]
            clauses.append(BinOp("and", lits[0], lits[1]))
        if not clauses:
            formula = Const(False)
        else:
            formula = clauses[0]
            for clause in clauses[1:]:
                formula = BinOp("or", formula, clause)
        assert compile_expr(formula, ("x", "y")) == spec
    # sampled soundness at n=3 and n=4
    for n in (3, 4):
        names = names4[:n]
        for _ in range(60):
            e = _random_ast(rng, names, depth=4)
            spec = compile_expr(e, names)
            for p in range(1 << n):
                env = {name: bool(p >> i & 1) for i, name in enumerate(names)}
                assert spec.is_shaded(p) == evaluate_bool(e, env)
    # seeded selftest emits byte-identical output on repeat runs
    outputs = []
    codes = []
    for _ in range(2):
        buf = io.StringIO()
        with redirect_stdout(buf):
            codes.append(cli.main(["selftest", "--seed", "42"]))
        outputs.append(buf.getvalue())
    assert codes == [0, 0]
    assert outputs[0] == outputs[1]
    _report(9, "1000 AST round-trips; compile soundness exhaustive n=2, sampled "
               "n=3,4; selftest --seed 42 reproducible")
