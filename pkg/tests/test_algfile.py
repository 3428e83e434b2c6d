"""Algebra definition file format: parsing, rendering, round trips."""

from __future__ import annotations

from fractions import Fraction

import pytest

from nilschouten.algfile import (
    AlgebraFile,
    AlgebraSyntaxError,
    DuplicateBracketError,
    parse_algebra_file,
    render_algebra_file,
)
from nilschouten.catalog import ALGEBRA_IDS, get_algebra
from nilschouten.liealg import InvalidAlgebraError
from nilschouten.ratpoly import Polynomial


A31_TEXT = """\
# single-bracket five-dimensional table
dim 5
param alpha positive
bracket 1 2 : alpha*e5
"""


def test_parse_matches_catalog_entry():
    parsed = parse_algebra_file(A31_TEXT)
    catalog = get_algebra("A3_1+2A1")
    assert parsed.algebra.dim == 5
    assert parsed.algebra.c == catalog.c
    assert parsed.algebra.constraints == catalog.constraints
    assert parsed.sample is None


def test_parse_abelian():
    parsed = parse_algebra_file("dim 5\n")
    assert parsed.algebra.is_abelian()


def test_parse_multi_term_brackets_and_samples():
    text = """\
dim 5
param alpha positive
param beta positive
param gamma free
bracket 1 2 : alpha*e3 + gamma*e5   # two targets
bracket 1 3 : beta*e5
sample alpha = 2
sample beta = 3/2
sample gamma = -1/2
"""
    parsed = parse_algebra_file(text)
    assert parsed.algebra.c == get_algebra("A4_1+A1_case1").c
    assert parsed.sample == {
        "alpha": Fraction(2),
        "beta": Fraction(3, 2),
        "gamma": Fraction(-1, 2),
    }


def test_parse_polynomial_coefficients_and_signs():
    text = """\
dim 4
param t free
bracket 1 2 : (t^2 - 1/2)*e3 - 2*e4
"""
    parsed = parse_algebra_file(text)
    g = parsed.algebra
    assert g.c[0][1][2] == Polynomial.parse("t^2 - 1/2")
    assert g.c[0][1][3] == Polynomial.parse("-2")


def test_bad_pair_ordering_rejected():
    with pytest.raises(AlgebraSyntaxError) as err:
        parse_algebra_file("dim 5\nbracket 1 1 : e2\n")
    assert err.value.line == 2


def test_duplicate_bracket_rejected():
    text = "dim 3\nbracket 1 2 : e3\nbracket 1 2 : 2*e3\n"
    with pytest.raises(DuplicateBracketError) as err:
        parse_algebra_file(text)
    assert err.value.line == 3


def test_syntax_errors_carry_line_numbers():
    cases = [
        ("dim 5\nbracket 1 2\n", 2),          # missing colon
        ("dim 5\nparam alpha sometimes\n", 2),  # bad relation
        ("dim 0\n", 1),                        # bad dimension
        ("dim 5\nbracket 1 2 : alpha*e9\n", 2),  # basis index out of range
        ("dim 5\nbracket 1 2 : alpha\n", 2),   # no basis symbol
        ("dim 5\nparam alpha free\nbracket 1 2 : alphae5\n", 3),  # missing '*'
        ("dim 5\nfrobnicate 3\n", 2),          # unknown directive
        ("dim 5\nsample alpha = x\n", 2),      # non-rational sample
        ("dim 5\nparam e2 free\n", 2),         # parameter shadows basis symbol
    ]
    for text, line in cases:
        with pytest.raises(AlgebraSyntaxError) as err:
            parse_algebra_file(text)
        assert err.value.line == line, text


def test_missing_dim_rejected():
    with pytest.raises(AlgebraSyntaxError):
        parse_algebra_file("param alpha free\n")


def test_jacobi_violations_surface_from_parser():
    text = "dim 3\nbracket 1 2 : e3\nbracket 1 3 : e1\n"
    with pytest.raises(InvalidAlgebraError) as err:
        parse_algebra_file(text)
    assert [v[0] for v in err.value.violations] == [(1, 2, 3)]


def test_round_trip_identity():
    for text in [
        A31_TEXT,
        "dim 5\n",
        "dim 5\nparam alpha positive\nparam beta free\n"
        "bracket 1 2 : alpha*e3 + beta*e4\nbracket 1 3 : (alpha+beta)*e5\n"
        "sample alpha = 1\nsample beta = -2/3\n",
    ]:
        parsed = parse_algebra_file(text)
        rendered = render_algebra_file(parsed)
        assert parse_algebra_file(rendered) == parsed
        # canonical form is a fixed point
        assert render_algebra_file(parse_algebra_file(rendered)) == rendered


def test_round_trip_all_builtins():
    for algebra_id in ALGEBRA_IDS:
        source = AlgebraFile(get_algebra(algebra_id), None)
        rendered = render_algebra_file(source)
        parsed = parse_algebra_file(rendered, label=algebra_id)
        assert parsed.algebra.c == source.algebra.c
        assert parsed.algebra.constraints == source.algebra.constraints
