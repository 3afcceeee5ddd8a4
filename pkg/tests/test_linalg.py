import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from cactusreg.oracle.linalg import Q, FieldOps, field_name, parse_field, rank, rank_gf2, rref

matrices = st.integers(1, 6).flatmap(
    lambda cols: st.lists(st.lists(st.integers(-3, 3), min_size=cols, max_size=cols), max_size=7)
)


def sparse(rows):
    return [{c: v for c, v in enumerate(r) if v} for r in rows]


@pytest.mark.parametrize("text,expected", [("2", 2), ("32003", 32003), ("Q", Q), ("qq", Q), (7, 7)])
def test_parse_field(text, expected):
    assert parse_field(text) == expected


@pytest.mark.parametrize("bad", ["4", "1", "R", 9])
def test_parse_field_rejects(bad):
    with pytest.raises(ValueError):
        parse_field(bad)


def test_field_name():
    assert field_name(Q) == "Q" and field_name(2) == "GF(2)"


def test_small_examples():
    rows = [{0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: -1}]
    # rows 1 - 2 = row 3 over any field
    assert rank(rows, Q) == 2
    assert rank(rows, 32003) == 2
    # over GF(2) row 3 = row 1 + row 2 as well
    assert rank(rows, 2) == 2
    assert rank([{0: 2}], 2) == 0 and rank([{0: 2}], Q) == 1


def test_gf2_bitsets():
    assert rank_gf2([0b011, 0b110, 0b101]) == 2
    assert rank_gf2([]) == 0


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_rational_rank_matches_sympy(rows):
    expected = sympy.Matrix(rows).rank() if rows else 0
    assert rank(sparse(rows), Q) == expected


@settings(max_examples=200, deadline=None)
@given(matrices, st.sampled_from([2, 3, 5, 32003]))
def test_mod_p_rank_matches_dense_rref(rows, p):
    dense = rref(rows, FieldOps(p))[1] if rows else []
    assert rank(sparse(rows), p) == len(dense)
    assert rank(sparse(rows), p) <= rank(sparse(rows), Q)


def test_rref_over_q():
    red, piv = rref([[2, 4], [1, 3]], FieldOps(Q))
    assert piv == [0, 1] and red == [[1, 0], [0, 1]]
