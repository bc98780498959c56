"""Valuation of diagram parts and shaded operators under fuzzy and
three-component assignments, plus catalog tables and the brute-force
expansion oracle."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import fsum
from typing import Callable, Sequence, Union

from .errors import ArityMismatch, DomainError, OracleTooLarge, VerificationFailure
from .logic_core import (
    TIF,
    Component,
    FuzzyValue,
    NeutrosophicValue,
    PrevalenceOrder,
    fuzzy_disj_disjoint,
    inclusion_exclusion,
    neutro_conj,
    neutro_disj_disjoint,
    neutro_neg,
)
from .venn import OperatorSpec, Part, complement, knuth_registry

Value = Union[FuzzyValue, NeutrosophicValue]

ORACLE_MAX_K = 12


@dataclass(frozen=True)
class Assignment:
    """Ordered variable values, all fuzzy or all three-component."""

    names: tuple[str, ...]
    values: tuple[Value, ...]

    def __post_init__(self):
        names = tuple(self.names)
        values = tuple(self.values)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "values", values)
        if not names:
            raise DomainError("assignment needs at least one variable")
        if len(set(names)) != len(names):
            raise DomainError("duplicate variable names in assignment")
        if len(values) != len(names):
            raise ArityMismatch(
                f"{len(names)} variable names but {len(values)} values"
            )
        kinds = {type(v) for v in values}
        if kinds not in ({FuzzyValue}, {NeutrosophicValue}):
            raise ArityMismatch(
                "assignment values must be all fuzzy or all neutrosophic"
            )

    @property
    def kind(self) -> str:
        return "fuzzy" if isinstance(self.values[0], FuzzyValue) else "neutrosophic"

    @property
    def n(self) -> int:
        return len(self.names)

    @classmethod
    def fuzzy(cls, names: Sequence[str], truths: Sequence[float]) -> "Assignment":
        return cls(tuple(names), tuple(FuzzyValue.from_truth(t) for t in truths))

    @classmethod
    def neutrosophic(cls, names, triples) -> "Assignment":
        values = []
        for name, (t, i, f) in zip(names, triples, strict=True):
            for channel, x in (("T", t), ("I", i), ("F", f)):
                if not 0.0 <= x <= 1.0:
                    raise DomainError(
                        f"variable {name!r}: {channel}={x!r} outside [0, 1]"
                    )
            values.append(NeutrosophicValue(t, i, f))
        return cls(tuple(names), tuple(values))


def diagram_norm(a: Assignment) -> float:
    """Product of the variable norms; the target norm for aggregation."""
    total = 1.0
    for v in a.values:
        total *= v.norm()
    return total


def _require(a: Assignment, n: int, kind: str) -> None:
    if a.kind != kind:
        raise ArityMismatch(f"expected a {kind} assignment, got {a.kind}")
    if a.n != n:
        raise ArityMismatch(f"assignment covers {a.n} variables, diagram needs {n}")


def fuzzy_part_value(part: Part, a: Assignment) -> FuzzyValue:
    """Fuzzy value of one part.

    Truth multiplies t_i for member variables and 1 - t_j for the others.
    Falsehood is the inclusion-exclusion union of f_i for members and t_j for
    non-members, which complements the truth exactly.
    """
    _require(a, part.n, "fuzzy")
    truth = 1.0
    union_args = []
    for i, v in enumerate(a.values):
        if part.mask >> i & 1:
            truth *= v.t
            union_args.append(v.f)
        else:
            truth *= 1.0 - v.t
            union_args.append(v.t)
    return FuzzyValue(truth, inclusion_exclusion(union_args))


def _fuzzy_detail(
    spec: OperatorSpec, part_value: Callable[[Part], FuzzyValue]
) -> tuple[FuzzyValue, str]:
    parts = spec.shaded_parts()
    if not parts:
        return FuzzyValue(0.0, 1.0), "empty"
    if len(parts) == 1:
        return part_value(parts[0]), f"part {parts[0].label()}"
    labels = "+".join(p.label() for p in parts)
    return fuzzy_disj_disjoint([part_value(p) for p in parts]), f"union {labels}"


def fuzzy_operator_eval(spec: OperatorSpec, a: Assignment) -> FuzzyValue:
    """Fuzzy value of a shaded operator: the disjoint sum of its parts.

    The empty operator is (0, 1); a single shaded part passes through
    unchanged.
    """
    _require(a, spec.n, "fuzzy")
    value, _ = _fuzzy_detail(spec, lambda p: fuzzy_part_value(p, a))
    return value


def neutro_part_value(
    part: Part, a: Assignment, order: PrevalenceOrder = TIF
) -> NeutrosophicValue:
    """Three-component value of one part: the conjunction of the variable
    values, with non-member variables entering through their negation."""
    _require(a, part.n, "neutrosophic")
    operands = [
        v if part.mask >> i & 1 else neutro_neg(v) for i, v in enumerate(a.values)
    ]
    return neutro_conj(operands, order)


def _neutro_detail(
    spec: OperatorSpec,
    a: Assignment,
    part_value: Callable[[Part], NeutrosophicValue],
) -> tuple[NeutrosophicValue, str, float | None]:
    n = spec.n
    full = spec.full_mask
    if spec.shaded == 0:
        return NeutrosophicValue(0.0, 0.0, 1.0), "empty", None
    if spec.shaded == full:
        return NeutrosophicValue(1.0, 0.0, 0.0), "full", None
    # literal recognition keeps projections and complementations exact even
    # when aggregation would smear indeterminacy
    for i in range(n):
        projection = 0
        for p in range(1 << n):
            if p >> i & 1:
                projection |= 1 << p
        if spec.shaded == projection:
            return a.values[i], f"projection {a.names[i]}", None
        if spec.shaded == full ^ projection:
            return neutro_neg(a.values[i]), f"complement {a.names[i]}", None
    shaded_parts = spec.shaded_parts()
    other_parts = complement(spec).shaded_parts()
    use_complement = len(other_parts) < len(shaded_parts)
    if len(other_parts) == len(shaded_parts) and shaded_parts[0].mask == 0:
        # tie: prefer the side without the all-negated region
        use_complement = True
    side = other_parts if use_complement else shaded_parts
    tau = None
    if len(side) == 1:
        value = part_value(side[0])
        word = "negated part" if use_complement else "part"
        strategy = f"{word} {side[0].label()}"
    else:
        tau = diagram_norm(a)
        value = neutro_disj_disjoint([part_value(p) for p in side], tau)
        word = "negated union" if use_complement else "union"
        strategy = f"{word} " + "+".join(p.label() for p in side)
    if use_complement:
        value = neutro_neg(value)
    return value, strategy, tau


def neutro_operator_eval(
    spec: OperatorSpec, a: Assignment, order: PrevalenceOrder = TIF
) -> NeutrosophicValue:
    """Three-component value of a shaded operator.

    The empty and full operators are (0,0,1) and (1,0,0).  An operator whose
    shading is exactly the parts inside variable i, or exactly the parts
    outside it, is the literal x_i or its negation and returns that value
    directly.  Anything else aggregates whichever of the shaded set and its
    complement is smaller (on a tie, the side without the all-negated part):
    one part evaluates directly, several parts combine through the disjoint
    disjunction with target norm equal to the product of the variable norms.
    A complement-side result is negated on the way out.
    """
    _require(a, spec.n, "neutrosophic")
    value, _, _ = _neutro_detail(spec, a, lambda p: neutro_part_value(p, a, order))
    return value


def oracle_expand(
    values: Sequence[NeutrosophicValue],
    order: PrevalenceOrder = TIF,
    max_k: int = ORACLE_MAX_K,
) -> NeutrosophicValue:
    """Ground-truth conjunction by enumerating all 3^k component drawings.

    Every drawing contributes the product of its components to the bucket of
    its strongest class.  This shares no code with the subset-composition
    route, so the two must agree to float precision.
    """
    k = len(values)
    if k < 1:
        raise DomainError("oracle needs at least one operand")
    if k > max_k:
        raise OracleTooLarge(f"3^{k} terms exceed the budget of 3^{max_k}")
    choices = [
        ((Component.T, v.T), (Component.I, v.I), (Component.F, v.F)) for v in values
    ]
    buckets = {Component.T: 0.0, Component.I: 0.0, Component.F: 0.0}
    for drawing in itertools.product(*choices):
        term = 1.0
        strongest = drawing[0][0]
        for comp, x in drawing:
            term *= x
            if order.rank(comp) > order.rank(strongest):
                strongest = comp
        buckets[strongest] += term
    return NeutrosophicValue(
        buckets[Component.T], buckets[Component.I], buckets[Component.F]
    )


def _fuzzy_part_oracle(part: Part, a: Assignment) -> FuzzyValue:
    # independent falsehood route: complementary product instead of
    # symmetric sums
    truth = 1.0
    miss = 1.0
    for i, v in enumerate(a.values):
        if part.mask >> i & 1:
            truth *= v.t
            miss *= 1.0 - v.f
        else:
            truth *= 1.0 - v.t
            miss *= 1.0 - v.t
    return FuzzyValue(truth, 1.0 - miss)


def _neutro_part_oracle(part, a, order, max_k=ORACLE_MAX_K):
    operands = [
        v if part.mask >> i & 1 else neutro_neg(v) for i, v in enumerate(a.values)
    ]
    return oracle_expand(operands, order, max_k)


@dataclass(frozen=True)
class EvalReport:
    """Everything one operator evaluation produced.

    part_values covers all 2^n parts in ascending mask order, shaded or not.
    partition_residual measures how far the part values drift from the exact
    partition identity: |sum of part truths - 1| for fuzzy assignments, the
    worst |part norm - diagram norm| for three-component ones.  oracle_delta
    is the largest componentwise gap against the brute-force recomputation,
    or None when no cross-check was requested.
    """

    spec: OperatorSpec
    logic: str
    part_values: tuple[tuple[Part, Value], ...]
    aggregate: Value
    strategy: str
    tau: float | None
    partition_residual: float
    oracle_delta: float | None


def _delta(x: Value, y: Value) -> float:
    if isinstance(x, FuzzyValue):
        return max(abs(x.t - y.t), abs(x.f - y.f))
    return max(abs(x.T - y.T), abs(x.I - y.I), abs(x.F - y.F))


def evaluate_operator(
    spec: OperatorSpec,
    a: Assignment,
    order: PrevalenceOrder = TIF,
    with_oracle: bool = False,
) -> EvalReport:
    """Evaluate a shaded operator and report per-part values, the aggregation
    strategy, and optional brute-force cross-check."""
    all_parts = tuple(Part(spec.n, p) for p in range(spec.part_count))
    if a.kind == "fuzzy":
        _require(a, spec.n, "fuzzy")
        by_mask = {p.mask: fuzzy_part_value(p, a) for p in all_parts}
        aggregate, strategy = _fuzzy_detail(spec, lambda p: by_mask[p.mask])
        tau = None
        residual = abs(fsum(v.t for v in by_mask.values()) - 1.0)
        oracle_delta = None
        if with_oracle:
            oracle_by_mask = {p.mask: _fuzzy_part_oracle(p, a) for p in all_parts}
            oracle_agg, _ = _fuzzy_detail(spec, lambda p: oracle_by_mask[p.mask])
            oracle_delta = max(
                _delta(oracle_agg, aggregate),
                max(_delta(by_mask[m], oracle_by_mask[m]) for m in by_mask),
            )
    else:
        _require(a, spec.n, "neutrosophic")
        by_mask = {p.mask: neutro_part_value(p, a, order) for p in all_parts}
        aggregate, strategy, tau = _neutro_detail(spec, a, lambda p: by_mask[p.mask])
        target = diagram_norm(a)
        residual = max(abs(v.norm() - target) for v in by_mask.values())
        oracle_delta = None
        if with_oracle:
            oracle_by_mask = {
                p.mask: _neutro_part_oracle(p, a, order) for p in all_parts
            }
            oracle_agg, _, _ = _neutro_detail(
                spec, a, lambda p: oracle_by_mask[p.mask]
            )
            oracle_delta = max(
                _delta(oracle_agg, aggregate),
                max(_delta(by_mask[m], oracle_by_mask[m]) for m in by_mask),
            )
    return EvalReport(
        spec=spec,
        logic=a.kind,
        part_values=tuple((p, by_mask[p.mask]) for p in all_parts),
        aggregate=aggregate,
        strategy=strategy,
        tau=tau,
        partition_residual=residual,
        oracle_delta=oracle_delta,
    )


TABLE_GRID = tuple(i / 10 for i in range(11))
TABLE_TOL = 1e-12


@dataclass(frozen=True)
class FuzzyOperatorRow:
    row: int
    index: int
    name: str
    symbol: str
    truth_poly: str


@dataclass(frozen=True)
class NeutroOperatorRow:
    row: int
    index: int
    name: str
    value: NeutrosophicValue
    strategy: str
    tau: float | None


def fuzzy_operator_table() -> tuple[FuzzyOperatorRow, ...]:
    """The catalog of binary operators with their truth polynomials.

    Before emitting anything, every operator's diagram evaluation is checked
    against its polynomial on the 11x11 grid over {0, 0.1, ..., 1}; a
    deviation beyond TABLE_TOL raises VerificationFailure.
    """
    rows = []
    for position, op in enumerate(knuth_registry()):
        for t1 in TABLE_GRID:
            for t2 in TABLE_GRID:
                a = Assignment.fuzzy(("x", "y"), (t1, t2))
                got = fuzzy_operator_eval(op.spec, a).t
                want = op.truth_poly(t1, t2)
                if abs(got - want) > TABLE_TOL:
                    raise VerificationFailure(
                        f"{op.display_name} deviates at ({t1}, {t2}): "
                        f"{got!r} vs {want!r}"
                    )
        rows.append(
            FuzzyOperatorRow(
                row=position,
                index=op.index,
                name=op.display_name,
                symbol=op.symbol,
                truth_poly=op.truth_poly.text,
            )
        )
    return tuple(rows)


def neutro_operator_table(
    a: Assignment, order: PrevalenceOrder = TIF
) -> tuple[NeutroOperatorRow, ...]:
    """Evaluate the whole binary catalog under one assignment, annotating
    each row with the aggregation strategy it took."""
    _require(a, 2, "neutrosophic")
    rows = []
    for position, op in enumerate(knuth_registry()):
        value, strategy, tau = _neutro_detail(
            op.spec, a, lambda p: neutro_part_value(p, a, order)
        )
        rows.append(
            NeutroOperatorRow(
                row=position,
                index=op.index,
                name=op.display_name,
                value=value,
                strategy=strategy,
                tau=tau,
            )
        )
    return tuple(rows)
