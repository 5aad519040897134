import math
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coxref.core import INF, CoxeterMatrix, load_matrix, named_matrix, parse_matrix_text, validate_matrix
from coxref.errors import BadEntry, DiagonalNotOne, InvalidWord, MatrixError, NotSymmetric, OffDiagonalTooSmall

DATA = Path(__file__).resolve().parents[1] / "data" / "matrices"


def test_dihedral_three_is_valid():
    m = validate_matrix([[1, 3], [3, 1]])
    assert m.rank == 2 and m[0, 1] == 3


def test_asymmetric_rejected():
    with pytest.raises(NotSymmetric):
        validate_matrix([[1, 2], [3, 1]])


def test_b3_valid():
    m = validate_matrix([[1, 3, 2], [3, 1, 4], [2, 4, 1]])
    assert m.rank == 3 and m[1, 2] == 4


@pytest.mark.parametrize("raw, err", [
    ([[2, 3], [3, 1]], DiagonalNotOne),
    ([[1, 1], [1, 1]], OffDiagonalTooSmall),
    ([[1, 0], [0, 1]], BadEntry),
    ([[1, 2.5], [2.5, 1]], BadEntry),
    ([[1, "x"], ["x", 1]], BadEntry),
    ([[1, 2]], MatrixError),
])
def test_invalid_matrices(raw, err):
    with pytest.raises(err):
        validate_matrix(raw)


def test_infinity_is_distinguished():
    m = validate_matrix([[1, "inf"], ["inf", 1]])
    assert m[0, 1] == INF and math.isinf(m[0, 1])
    assert m.to_json() == [[1, "inf"], ["inf", 1]]


def test_text_format_round_trip():
    text = "# a comment\nrank 3\n1 3 2\n3 1 inf  # trailing\n2 inf 1\n"
    m = parse_matrix_text(text)
    assert m.entries[1][2] == INF
    assert parse_matrix_text(m.to_text()) == m


def test_text_format_errors():
    with pytest.raises(MatrixError):
        parse_matrix_text("rank 2\n1 3\n")
    with pytest.raises(MatrixError):
        parse_matrix_text("1 3\n3 1\n")


@pytest.mark.parametrize("fname, name", [
    ("A2.txt", None), ("B2.txt", None), ("A3.txt", "A3"), ("B3.txt", "B3"), ("H3.txt", "H3"),
    ("Dinf.txt", "Dinf"), ("affine236.txt", None),
])
def test_shipped_matrix_files(fname, name):
    m = load_matrix(DATA / fname)
    if name is not None:
        assert m == named_matrix(name)


def test_names_and_word_parsing():
    m = load_matrix(DATA / "A2.txt")
    assert m.generator_names() == ("s", "t")
    assert m.parse_word("s t s") == (0, 1, 0)
    assert m.parse_word("sts") == (0, 1, 0)
    assert m.parse_word("s0 s1") == (0, 1)
    assert m.parse_word("") == () == m.parse_word("1")
    with pytest.raises(InvalidWord):
        m.parse_word("s u")
    assert m.format_word((1, 0)) == "t s"


def test_names_do_not_affect_equality():
    a = validate_matrix([[1, 3], [3, 1]])
    assert a.with_names(("x", "y")) == a


@given(st.integers(1, 4).flatmap(lambda n: st.lists(
    st.one_of(st.integers(2, 9), st.just("inf")), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2
).map(lambda xs: (n, xs))))
def test_random_symmetric_matrices_validate(data):
    n, xs = data
    raw = [[1] * n for _ in range(n)]
    it = iter(xs)
    for i in range(n):
        for j in range(i + 1, n):
            raw[i][j] = raw[j][i] = next(it)
    m = validate_matrix(raw)
    assert isinstance(m, CoxeterMatrix)
    assert parse_matrix_text(m.to_text()) == m
