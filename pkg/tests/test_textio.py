import pytest
from hypothesis import given, strategies as st

from conftest import mat
from ginv.errors import MatrixParseError
from ginv.fields import GF, GF2, Q, QI
from ginv.matrix import Matrix
from ginv.textio import format_matrix, parse_matrix, read_matrix, write_matrix


def test_parse_rational():
    a = parse_matrix("field: Q\n2 2\n1 1/2\n-3 0\n")
    assert a == mat([[1, "1/2"], [-3, 0]])


def test_parse_entries_unaligned():
    a = parse_matrix("field: GF(3)\n2 3\n1 2 0 2\n1 1\n")
    assert a == mat([[1, 2, 0], [2, 1, 1]], GF(3))


def test_parse_gaussian_and_quadratic():
    assert parse_matrix("field: QI\n1 2\n1+i -i\n") == mat([["1+i", "-i"]], QI)
    assert parse_matrix("field: GF(3^2)\n1 2\n1+2t t\n") == mat([[(1, 2), (0, 1)]], GF2(3))


def test_comments_are_ignored():
    text = "# a note\nfield: Q  # rationals\n1 1\n5 # the entry\n"
    assert parse_matrix(text) == mat([[5]])


@pytest.mark.parametrize("text,line,column", [
    ("", 1, 1),
    ("fld: Q\n1 1\n1\n", 1, 1),
    ("field: R\n1 1\n1\n", 1, 8),
    ("field: Q\n0 2\n", 2, 1),
    ("field: Q\n2 2\n1 2\n3 y\n", 4, 3),
    ("field: Q\n2 2\n1 2\n3\n", 4, 1),
    ("field: Q\n1 1\n1 2\n", 3, 3),
    ("field: GF(2)\n1 1\n1/2\n", 3, 1),
])
def test_parse_errors_have_positions(text, line, column):
    with pytest.raises(MatrixParseError) as info:
        parse_matrix(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_format():
    assert format_matrix(mat([[1, "1/2"], [0, -3]])) == "field: Q\n2 2\n  1 1/2\n  0  -3\n"


fields = st.sampled_from([Q, QI, GF(2), GF(5), GF2(3)])


@st.composite
def matrices(draw):
    fld = draw(fields)
    r, c = draw(st.integers(1, 3)), draw(st.integers(1, 3))
    if fld is Q:
        el = st.fractions(max_denominator=9).filter(lambda f: abs(f) < 1000)
    elif fld is QI:
        f = st.fractions(max_denominator=9).filter(lambda f: abs(f) < 1000)
        el = st.tuples(f, f)
    else:
        el = st.sampled_from(list(fld.elements()))
    return Matrix(fld, r, c, draw(st.lists(el, min_size=r * c, max_size=r * c)))


@given(matrices())
def test_round_trip(a):
    assert parse_matrix(format_matrix(a)) == a


def test_file_helpers(tmp_path):
    a = mat([["i", 2]], QI)
    write_matrix(a, tmp_path / "a.txt")
    assert read_matrix(tmp_path / "a.txt") == a
