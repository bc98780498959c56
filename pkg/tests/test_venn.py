"""Tests for diagram parts, operator specs, and the binary operator catalog."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vennlogic import (
    DomainError,
    LengthMismatch,
    OperatorSpec,
    Part,
    TooManyVariables,
    complement,
    enumerate_parts,
    knuth_registry,
    operator_from_truth_table,
)

# Classical two-variable connectives in the catalog's row order.  Kept as
# plain lambdas so the check shares nothing with the library tables.
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

CORNERS = tuple((bool(p & 1), bool(p >> 1 & 1)) for p in range(4))


class TestPart:
    def test_variables_and_contains(self):
        part = Part(4, 0b1010)
        assert part.variables() == (2, 4)
        assert not part.contains(1)
        assert part.contains(2)
        assert not part.contains(3)
        assert part.contains(4)

    def test_labels_n3(self):
        labels = [p.label() for p in enumerate_parts(3)]
        assert labels == ["0", "1", "2", "12", "3", "13", "23", "123"]

    def test_labels_dotted_from_ten_variables(self):
        assert Part(10, (1 << 9) | 1).label() == "1.10"
        assert Part(10, (1 << 9) | 2).label() == "2.10"
        assert Part(9, (1 << 8) | 1).label() == "19"

    def test_label_round_trip_small(self):
        for n in range(1, 7):
            for part in enumerate_parts(n):
                assert Part.from_label(part.label(), n) == part

    def test_label_round_trip_dotted(self):
        for mask in (0, 1, 1 << 9, 0b1000110001, (1 << 10) - 1):
            part = Part(10, mask)
            assert Part.from_label(part.label(), 10) == part

    def test_bad_labels_rejected(self):
        for text in ("", "21", "11", "4", "x", "02", "1.2"):
            with pytest.raises(DomainError):
                Part.from_label(text, 3)
        with pytest.raises(DomainError):
            Part.from_label("12", 10)

    def test_mask_bounds(self):
        with pytest.raises(DomainError):
            Part(2, 4)
        with pytest.raises(DomainError):
            Part(2, -1)

    def test_variable_count_bounds(self):
        with pytest.raises(DomainError):
            Part(0, 0)
        with pytest.raises(TooManyVariables):
            Part(21, 0)


class TestOperatorSpec:
    def test_part_bookkeeping(self):
        spec = OperatorSpec(2, 0b1001)
        assert spec.part_count == 4
        assert spec.full_mask == 0b1111
        assert spec.shaded_count() == 2
        assert [p.mask for p in spec.shaded_parts()] == [0, 3]
        assert spec.is_shaded(0) and spec.is_shaded(3)
        assert not spec.is_shaded(1) and not spec.is_shaded(2)

    def test_shaded_mask_bounds(self):
        with pytest.raises(DomainError):
            OperatorSpec(2, 16)
        with pytest.raises(DomainError):
            OperatorSpec(2, -1)

    def test_truth_table_round_trip(self):
        spec = operator_from_truth_table(2, [0, 1, 1, 0])
        assert spec == OperatorSpec(2, 0b0110)
        with pytest.raises(LengthMismatch):
            operator_from_truth_table(2, [0, 1, 1])

    def test_complement_involution_fixed(self):
        spec = OperatorSpec(3, 0b10110100)
        assert complement(spec).shaded == 0b01001011
        assert complement(complement(spec)) == spec

    @given(st.integers(min_value=1, max_value=6), st.data())
    def test_complement_involution(self, n, data):
        shaded = data.draw(st.integers(min_value=0, max_value=(1 << (1 << n)) - 1))
        spec = OperatorSpec(n, shaded)
        assert complement(complement(spec)) == spec
        assert complement(spec).shaded_count() == spec.part_count - spec.shaded_count()

    def test_enumerate_parts(self):
        parts = enumerate_parts(4)
        assert len(parts) == 16
        assert [p.mask for p in parts] == list(range(16))


class TestRegistry:
    def test_sixteen_rows(self):
        assert len(knuth_registry()) == 16

    def test_indices_match_classical_tables(self):
        for row, op in zip(ROW_FUNCS, knuth_registry()):
            want = operator_from_truth_table(2, [row(x, y) for x, y in CORNERS])
            assert op.spec == want
            assert op.index == want.shaded

    def test_row_order_is_not_index_order(self):
        indices = [op.index for op in knuth_registry()]
        assert indices == [0, 8, 2, 10, 4, 12, 6, 14, 1, 9, 3, 11, 5, 13, 7, 15]

    def test_opposite_rows_are_complements(self):
        ops = knuth_registry()
        for i in range(16):
            assert ops[i].spec == complement(ops[15 - i].spec)

    def test_truth_polynomials_at_corners(self):
        for row, op in zip(ROW_FUNCS, knuth_registry()):
            for x, y in CORNERS:
                assert op.truth_poly(float(x), float(y)) == float(row(x, y))

    def test_truth_polynomial_text_matches_coefficients(self):
        grid = [i / 4 for i in range(5)]
        for op in knuth_registry():
            for t1 in grid:
                for t2 in grid:
                    via_text = eval(op.truth_poly.text, {"t1": t1, "t2": t2})
                    assert op.truth_poly(t1, t2) == pytest.approx(via_text, abs=1e-15)

    def test_names_and_symbols(self):
        ops = knuth_registry()
        assert ops[1].display_name == "Conjunction; and"
        assert ops[7].names[0] == "Inclusive disjunction"
        assert ops[9].symbol == "≡"
        symbols = [op.symbol for op in ops]
        assert len(set(symbols)) == 16
        all_names = [name for op in ops for name in op.names]
        assert len(set(all_names)) == len(all_names)
