"""Disjoint diagram regions, their codification labels, and operators as
shaded region sets.

A diagram over n variables splits into 2^n disjoint parts.  A part is encoded
by a bitmask over variables: bit i-1 set means variable i occurs un-negated in
the part.  An n-ary operator is the set of parts it shades, packed into a
2^n-bit integer whose bit p stands for the part with mask p.  That integer is
the operator's index, which also makes row p of a classical truth table (the
corner where variable i is true exactly when bit i-1 of p is set) line up with
part p.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .errors import DomainError, LengthMismatch, TooManyVariables

N_MAX = 20


def _check_n(n: int) -> None:
    if n < 1:
        raise DomainError(f"need at least one variable, got n={n}")
    if n > N_MAX:
        raise TooManyVariables(f"n={n} exceeds the supported maximum of {N_MAX}")


@dataclass(frozen=True)
class Part:
    """One disjoint region of an n-variable diagram."""

    n: int
    mask: int

    def __post_init__(self):
        _check_n(self.n)
        if not 0 <= self.mask < (1 << self.n):
            raise DomainError(f"part mask {self.mask} out of range for n={self.n}")

    def variables(self) -> tuple[int, ...]:
        """1-based indices of the sets this part lies inside."""
        return tuple(i + 1 for i in range(self.n) if self.mask >> i & 1)

    def contains(self, var_index: int) -> bool:
        return bool(self.mask >> (var_index - 1) & 1)

    def label(self) -> str:
        """Codification label: the member-set indices in ascending order,
        "0" for the region outside every set.

        Indices are concatenated up to n = 9; larger diagrams separate them
        with dots because concatenation turns ambiguous there.
        """
        included = self.variables()
        if not included:
            return "0"
        sep = "" if self.n <= 9 else "."
        return sep.join(str(i) for i in included)

    @classmethod
    def from_label(cls, text: str, n: int) -> "Part":
        _check_n(n)
        if text == "0":
            return cls(n, 0)
        pieces = list(text) if n <= 9 else text.split(".")
        if not pieces:
            raise DomainError(f"bad part label {text!r}")
        mask = 0
        last = 0
        for piece in pieces:
            try:
                idx = int(piece)
            except ValueError:
                raise DomainError(f"bad part label {text!r}") from None
            if not 1 <= idx <= n or idx <= last:
                raise DomainError(f"bad part label {text!r} for n={n}")
            mask |= 1 << (idx - 1)
            last = idx
        return cls(n, mask)


@dataclass(frozen=True)
class OperatorSpec:
    """An n-ary operator as the set of parts it shades (bit p <-> part p)."""

    n: int
    shaded: int

    def __post_init__(self):
        _check_n(self.n)
        if self.shaded < 0 or self.shaded.bit_length() > (1 << self.n):
            raise DomainError(f"shaded mask {self.shaded} out of range for n={self.n}")

    @property
    def part_count(self) -> int:
        return 1 << self.n

    @property
    def full_mask(self) -> int:
        return (1 << self.part_count) - 1

    def is_shaded(self, part_mask: int) -> bool:
        return bool(self.shaded >> part_mask & 1)

    def shaded_count(self) -> int:
        return self.shaded.bit_count()

    def shaded_parts(self) -> tuple[Part, ...]:
        return tuple(
            Part(self.n, p) for p in range(self.part_count) if self.shaded >> p & 1
        )


def enumerate_parts(n: int) -> tuple[Part, ...]:
    """All 2^n parts of an n-variable diagram in ascending mask order."""
    _check_n(n)
    return tuple(Part(n, mask) for mask in range(1 << n))


def operator_from_truth_table(n: int, outputs) -> OperatorSpec:
    """Build a spec from the 2^n outputs of a classical truth table.

    Output row p belongs to the corner where variable i is true exactly when
    bit i-1 of p is set, so rows map one-to-one onto part bits.
    """
    _check_n(n)
    outputs = list(outputs)
    if len(outputs) != 1 << n:
        raise LengthMismatch(
            f"expected {1 << n} truth table rows for n={n}, got {len(outputs)}"
        )
    shaded = 0
    for p, out in enumerate(outputs):
        if out:
            shaded |= 1 << p
    return OperatorSpec(n, shaded)


def complement(spec: OperatorSpec) -> OperatorSpec:
    """The operator shading exactly the parts spec leaves unshaded."""
    return OperatorSpec(spec.n, spec.full_mask ^ spec.shaded)


@dataclass(frozen=True)
class TruthPolynomial:
    """Bilinear truth form c0 + c1*t1 + c2*t2 + c12*t1*t2."""

    c0: int
    c1: int
    c2: int
    c12: int
    text: str

    def __call__(self, t1: float, t2: float) -> float:
        return self.c0 + self.c1 * t1 + self.c2 * t2 + self.c12 * t1 * t2


@dataclass(frozen=True)
class NamedOperator:
    """A catalogued two-variable operator.

    index duplicates spec.shaded: it is the operator's integer code under the
    part-bit convention and is independent of catalog row order.
    """

    index: int
    spec: OperatorSpec
    names: tuple[str, ...]
    symbol: str
    truth_poly: TruthPolynomial

    def __post_init__(self):
        if self.spec.n != 2:
            raise DomainError("named operators are binary")
        if self.index != self.spec.shaded:
            raise DomainError(
                f"index {self.index} does not match shaded mask {self.spec.shaded}"
            )

    @property
    def display_name(self) -> str:
        return "; ".join(self.names)


_REGISTRY_ROWS = (
    (0b0000, ("Contradiction", "falsehood", "constant 0"), "⊥", (0, 0, 0, 0), "0"),
    (0b1000, ("Conjunction", "and"), "∧", (0, 0, 0, 1), "t1*t2"),
    (0b0010, ("Nonimplication", "difference", "but not"), "⊅", (0, 1, 0, -1), "t1 - t1*t2"),
    (0b1010, ("Left projection",), "L", (0, 1, 0, 0), "t1"),
    (0b0100, ("Converse nonimplication", "not...but"), "⊄", (0, 0, 1, -1), "t2 - t1*t2"),
    (0b1100, ("Right projection",), "R", (0, 0, 1, 0), "t2"),
    (0b0110, ("Exclusive disjunction", "nonequivalence", "xor"), "⊕", (0, 1, 1, -2), "t1 + t2 - 2*t1*t2"),
    (0b1110, ("Inclusive disjunction", "or", "and/or"), "∨", (0, 1, 1, -1), "t1 + t2 - t1*t2"),
    (0b0001, ("Nondisjunction", "joint denial", "neither...nor"), "⊽", (1, -1, -1, 1), "1 - t1 - t2 + t1*t2"),
    (0b1001, ("Equivalence", "if and only if"), "≡", (1, -1, -1, 2), "1 - t1 - t2 + 2*t1*t2"),
    (0b0011, ("Right complementation",), "¬R", (1, 0, -1, 0), "1 - t2"),
    (0b1011, ("Converse implication", "if"), "⊂", (1, 0, -1, 1), "1 - t2 + t1*t2"),
    (0b0101, ("Left complementation",), "¬L", (1, -1, 0, 0), "1 - t1"),
    (0b1101, ("Implication", "only if", "if...then"), "⊃", (1, -1, 0, 1), "1 - t1 + t1*t2"),
    (0b0111, ("Nonconjunction", "not both...and", "nand"), "⊼", (1, 0, 0, -1), "1 - t1*t2"),
    (0b1111, ("Affirmation", "validity", "tautology", "constant 1"), "⊤", (1, 0, 0, 0), "1"),
)


@cache
def knuth_registry() -> tuple[NamedOperator, ...]:
    """The sixteen binary operators in Knuth's classical catalog row order,
    from contradiction up to tautology.

    Row position and integer index differ: the index is the shaded-part mask.
    """
    return tuple(
        NamedOperator(
            index=shaded,
            spec=OperatorSpec(2, shaded),
            names=names,
            symbol=symbol,
            truth_poly=TruthPolynomial(*coeffs, text=text),
        )
        for shaded, names, symbol, coeffs, text in _REGISTRY_ROWS
    )
