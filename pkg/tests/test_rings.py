"""Graded ring calculus: monomials, parsing, ideal pieces, Hilbert data."""

import pytest

from linsyz.linalg import GF, QQ
from linsyz.rings import (GradedIdeal, InhomogeneousError, Poly,
                          PolySyntaxError, Ring, colon_piece,
                          dim_degree_estimate, hilbert_function,
                          ideal_file_str, ideal_intersect_piece, monomial_basis,
                          parse_ideal_file, parse_poly, poly_str,
                          saturation_check)
from linsyz.corpus import rnc_ideal

F = GF()


def ring2():
    return Ring(("x", "y"), F)


def test_monomial_order_degree_one_is_variable_order():
    r = Ring(("x0", "x1", "x2"), F)
    assert monomial_basis(r, 1) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_monomial_order_grevlex():
    r = ring2()
    # x^2 > xy > y^2
    assert monomial_basis(r, 2) == [(2, 0), (1, 1), (0, 2)]


def test_parse_and_print_round_trip():
    r = Ring(("x0", "x1", "x2", "x3"), F)
    text = "x1^2 - x0*x2"
    p = parse_poly(r, text)
    assert poly_str(p) == text
    assert parse_poly(r, poly_str(p)) == p
    assert poly_str(parse_poly(r, "+3*x0*x1")) == "3*x0*x1"


def test_parse_errors():
    r = ring2()
    with pytest.raises(PolySyntaxError):
        parse_poly(r, "x + @")
    with pytest.raises(PolySyntaxError):
        parse_poly(r, "z + x")
    with pytest.raises(InhomogeneousError):
        parse_poly(r, "x^2 + y")
    with pytest.raises(PolySyntaxError):
        parse_poly(r, "")


def test_twisted_cubic_hilbert():
    i = rnc_ideal(3, F)
    assert [hilbert_function(i, d) for d in range(1, 5)] == [4, 7, 10, 13]
    # complement dimension in degree 3: C(6,3) - 10
    assert i.piece(3).dim == 10


def test_piece_dim_matches_piece():
    i = rnc_ideal(4, F)
    for d in (2, 3, 4):
        assert i.piece_dim(d) == i.piece(d).dim


def test_colon_piece():
    r = ring2()
    x, y = r.variable(0), r.variable(1)
    i = GradedIdeal(r, [x * x, x * y])
    c = colon_piece(i, x, 1)
    assert c.dim == 2          # both x and y multiply into I


def test_saturation_detects_unsaturated():
    r = ring2()
    x, y = r.variable(0), r.variable(1)
    unsat = GradedIdeal(r, [x * x, x * y])
    assert not saturation_check(unsat, 3).saturated
    sat = GradedIdeal(r, [x])
    assert saturation_check(sat, 3).saturated


def test_intersection_piece():
    r = Ring(("x0", "x1", "y"), F)
    hyper = GradedIdeal(r, [r.variable(2)])
    point = GradedIdeal(r, [r.variable(0), r.variable(1)])
    inter = ideal_intersect_piece(hyper, point, 2)
    assert inter.dim == 2      # span{x0*y, x1*y}


def test_dim_degree_estimate():
    est = dim_degree_estimate([4, 7, 10, 13])
    assert (est.ok, est.dimension, est.degree) == (True, 1, 3)
    est = dim_degree_estimate([1, 1, 1, 1])
    assert (est.dimension, est.degree) == (0, 1)
    est = dim_degree_estimate([0, 0, 0])
    assert est.dimension == -1
    assert not dim_degree_estimate([1, 2, 4]).ok
    with pytest.raises(ValueError):
        dim_degree_estimate([1, 2])


def test_ideal_file_round_trip():
    i = rnc_ideal(3, F)
    text = ideal_file_str(i)
    back = parse_ideal_file(text, F)
    assert back.ring.variables == i.ring.variables
    assert list(back.generators) == list(i.generators)


def test_ideal_file_errors():
    with pytest.raises(ValueError, match="vars"):
        parse_ideal_file("x^2\n", F)
    with pytest.raises(ValueError, match="line 2"):
        parse_ideal_file("vars: x y\nx^2 + y\n", F)


def test_rationals_field_pieces():
    i = rnc_ideal(3, QQ)
    assert [hilbert_function(i, d) for d in range(1, 4)] == [4, 7, 10]
