"""Multi-valued propositional logic over codified Venn regions.

An n-variable diagram splits into 2^n disjoint parts; any n-ary operator is
the set of parts it shades.  The package compiles expression text to such
shaded sets and evaluates them under boolean, fuzzy (t, f), or neutrosophic
(T, I, F) variable assignments.
"""

from .errors import (
    ArityMismatch,
    DisjointnessViolation,
    DomainError,
    LengthMismatch,
    OracleTooLarge,
    ParseError,
    SelfTestFailure,
    TooManyVariables,
    UnknownVariable,
    VennLogicError,
    VerificationFailure,
)
from .evaluate import (
    ORACLE_MAX_K,
    Assignment,
    EvalReport,
    FuzzyOperatorRow,
    NeutroOperatorRow,
    diagram_norm,
    evaluate_operator,
    fuzzy_operator_eval,
    fuzzy_operator_table,
    fuzzy_part_value,
    neutro_operator_eval,
    neutro_operator_table,
    neutro_part_value,
    oracle_expand,
)
from .expr import (
    BOOL_OPS,
    BinOp,
    Const,
    Expr,
    Not,
    Var,
    compile_expr,
    evaluate_bool,
    parse,
    render,
    variables,
)
from .logic_core import (
    EPS_DEN,
    EPS_NORM,
    ITF,
    TFI,
    TIF,
    Component,
    ComponentVector,
    FuzzyValue,
    NeutrosophicValue,
    PrevalenceOrder,
    compose,
    fuzzy_conj,
    fuzzy_disj_disjoint,
    fuzzy_neg,
    inclusion_exclusion,
    neutro_conj,
    neutro_disj_disjoint,
    neutro_neg,
)
from .venn import (
    N_MAX,
    NamedOperator,
    OperatorSpec,
    Part,
    TruthPolynomial,
    complement,
    enumerate_parts,
    knuth_registry,
    operator_from_truth_table,
)

__version__ = "0.1.0"
