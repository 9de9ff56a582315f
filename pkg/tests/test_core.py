"""Rings, monomials, parsing, and the canonical order."""

import pytest
from hypothesis import given, strategies as st

from fiberlab import (
    DomainError,
    GrammarError,
    Monomial,
    Ring,
    parse_monomial,
    parse_ring,
    tensor_ring,
)
from fiberlab.core import canonical_order, monomial_divides, monomial_lcm, sort_key


def test_parse_ring_eight_variables():
    ring = parse_ring("ring R = [a,b,c,d,x,y,z,t];")
    assert ring.name == "R"
    assert ring.variables == ("a", "b", "c", "d", "x", "y", "z", "t")
    assert ring.nvars == 8
    assert ring.block_names() == ("R",)


def test_parse_ring_single_variable():
    ring = parse_ring("ring S = [u];")
    assert ring.variables == ("u",)


def test_parse_ring_duplicate_name_rejected():
    with pytest.raises(GrammarError):
        parse_ring("ring R = [a,a];")


def test_ring_characteristic_must_be_prime():
    with pytest.raises(DomainError):
        Ring("R", ("x",), characteristic=6)
    Ring("R", ("x",), characteristic=32003)  # fine


def test_parse_monomial_basic(ring_xy):
    assert parse_monomial(ring_xy, "x^2*y").exponents == (2, 1)
    assert parse_monomial(ring_xy, "1").exponents == (0, 0)


def test_parse_monomial_appendix_generator(appendix_ring):
    m = parse_monomial(appendix_ring, "c*d*y*z*t")
    assert m.exponents == (0, 0, 1, 1, 0, 1, 1, 1)
    assert m.total_degree == 5


def test_parse_monomial_unknown_variable(ring_xy):
    with pytest.raises(GrammarError):
        parse_monomial(ring_xy, "q^2")


def test_parse_monomial_malformed(ring_xy):
    for bad in ("x^", "x**y", "^2", "x^y", ""):
        with pytest.raises(GrammarError):
            parse_monomial(ring_xy, bad)


def test_divides_and_lcm(ring_xy):
    u = Monomial(ring_xy, (1, 0))
    v = Monomial(ring_xy, (2, 1))
    w = Monomial(ring_xy, (2, 0))
    z = Monomial(ring_xy, (1, 3))
    assert monomial_divides(u, v)
    assert not monomial_divides(w, z)
    assert monomial_divides(u, u)
    assert monomial_lcm(Monomial(ring_xy, (2, 0)), Monomial(ring_xy, (1, 1))).exponents == (2, 1)
    one = Monomial(ring_xy, (0, 0))
    assert monomial_lcm(v, one) == v


def test_canonical_order_is_degree_then_lex(ring_xy):
    vecs = [(0, 2), (2, 0), (1, 1), (1, 0)]
    assert canonical_order(vecs) == [(2, 0), (1, 1), (0, 2), (1, 0)]


def test_print_round_trip(ring_xy):
    m = parse_monomial(ring_xy, "x^2*y")
    assert str(m) == "x^2*y"
    assert parse_monomial(ring_xy, str(m)) == m
    assert str(Monomial(ring_xy, (0, 0))) == "1"


def test_tensor_ring_blocks():
    R = parse_ring("ring R = [a,b];")
    S = parse_ring("ring S = [x];")
    T = tensor_ring("T", R, S)
    assert T.variables == ("a", "b", "x")
    assert [b.name for b in T.blocks] == ["R", "S"]
    assert T.block("S").start == 2
    with pytest.raises(GrammarError):
        tensor_ring("U", R, parse_ring("ring Q = [b];"))  # variable clash


small_exps = st.tuples(*[st.integers(0, 4)] * 3)


@given(small_exps, small_exps)
def test_divides_antisymmetry(a, b):
    ring = Ring("R", ("x", "y", "z"))
    u, v = Monomial(ring, a), Monomial(ring, b)
    if u.divides(v) and v.divides(u):
        assert u == v


@given(small_exps, small_exps, small_exps)
def test_divides_transitive_and_lcm_laws(a, b, c):
    ring = Ring("R", ("x", "y", "z"))
    u, v, w = Monomial(ring, a), Monomial(ring, b), Monomial(ring, c)
    if u.divides(v) and v.divides(w):
        assert u.divides(w)
    assert u.lcm(v) == v.lcm(u)
    assert u.lcm(u) == u
    assert u.lcm(v).lcm(w) == u.lcm(v.lcm(w))
    assert u.divides(u.lcm(v))


@given(small_exps)
def test_sort_key_orders_by_degree_first(a):
    ring = Ring("R", ("x", "y", "z"))
    u = Monomial(ring, a)
    key = sort_key(u.exponents)
    assert key[0] == u.total_degree
