"""Core polynomial arithmetic, term orders, and grading operations."""

import pytest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from arithdeg.errors import (AlgebraError, NotBigradedError, RingMismatchError,
                             ZeroPolynomialError)
from arithdeg.fields import GF
from arithdeg.orders import BlockOrder, DegRevLex, Lex, WeightedDegRevLex
from arithdeg.rings import RingDescriptor, parse_polynomial


@pytest.fixture
def R():
    return RingDescriptor.graded("x,y")


def test_add_cancellation(R):
    x, y = R.gens()
    assert (x + y) + (-y) == x


def test_difference_of_squares(R):
    x, y = R.gens()
    assert (x + 1) * (x - 1) == x ** 2 - 1


def test_prime_field_mul():
    R5 = RingDescriptor.graded("x", field=GF(5))
    x, = R5.gens()
    assert 3 * x * (4 * x) == 2 * x ** 2


def test_ring_mismatch(R):
    other = RingDescriptor.graded("x,y,z")
    with pytest.raises(RingMismatchError):
        R.gens()[0] + other.gens()[0]


def test_leading_term_examples(R):
    x, y = R.gens()
    f = x ** 2 + x * y + y ** 2
    assert f.leading_term(DegRevLex()) == ((2, 0), Fraction(1))
    g = y ** 3 + x
    assert g.leading_term(Lex()) == ((1, 0), Fraction(1))
    h = x ** 2 * y + x * y ** 2
    assert h.leading_term(DegRevLex()) == ((2, 1), Fraction(1))


def test_leading_term_of_zero(R):
    with pytest.raises(ZeroPolynomialError):
        R.zero().leading_term(DegRevLex())


def test_bidegree():
    B = RingDescriptor.bigraded("x", "y")
    assert B.bidegree((2, 1)) == (2, 1)
    assert B.bidegree((0, 0)) == (0, 0)
    assert B.bidegree((0, 3)) == (0, 3)


def test_bidegree_needs_bigraded(R):
    with pytest.raises(NotBigradedError):
        R.bidegree((1, 0))


def test_initial_block_form(R):
    x, y = R.gens()
    f = y ** 2 - x ** 3
    assert f.initial_block_form((0, 1)) == y ** 2
    hom = x ** 2 + x * y
    assert hom.initial_block_form((0, 1)) == hom
    g = x * y + x ** 2
    assert g.initial_block_form((0,)) == x * y


def test_initial_block_form_zero(R):
    with pytest.raises(ZeroPolynomialError):
        R.zero().initial_block_form((0,))


def test_parse_polynomial(R):
    x, y = R.gens()
    assert parse_polynomial(R, "x^2 - 2*x*y + 1/2") == x ** 2 - 2 * x * y + Fraction(1, 2)
    assert parse_polynomial(R, "(x+y)^2") == x ** 2 + 2 * x * y + y ** 2
    with pytest.raises(AlgebraError):
        parse_polynomial(R, "x + q")


def test_variable_cap():
    with pytest.raises(AlgebraError):
        RingDescriptor.graded(",".join("v%d" % i for i in range(13)))


# -- randomized algebra laws -------------------------------------------------

def _polys(ring, max_terms=4, max_exp=3, coeff_range=6):
    mono = st.tuples(*[st.integers(0, max_exp)] * ring.nvars)
    coeff = st.integers(-coeff_range, coeff_range)
    term = st.tuples(mono, coeff)
    return st.lists(term, max_size=max_terms).map(
        lambda terms: sum((ring.monomial(m, c) for m, c in terms), ring.zero()))


RING3 = RingDescriptor.graded("x,y,z")


@settings(max_examples=60, deadline=None)
@given(_polys(RING3), _polys(RING3), _polys(RING3))
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


MONO3 = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))


@settings(max_examples=80, deadline=None)
@given(MONO3, MONO3, MONO3)
def test_orders_multiplicative_and_global(u, v, w):
    for order in (DegRevLex(), Lex(), WeightedDegRevLex((2, 1, 3)),
                  BlockOrder([0], 3)):
        if order.key(u) < order.key(v):
            uw = tuple(a + b for a, b in zip(u, w))
            vw = tuple(a + b for a, b in zip(v, w))
            assert order.key(uw) < order.key(vw)
        assert order.key((0, 0, 0)) <= order.key(u)


@settings(max_examples=40, deadline=None)
@given(st.tuples(st.integers(0, 4), st.integers(0, 4)),
       st.tuples(st.integers(0, 4), st.integers(0, 4)))
def test_bidegree_additive(u, v):
    B = RingDescriptor.bigraded("x", "y")
    uv = tuple(a + b for a, b in zip(u, v))
    bu, bv, buv = B.bidegree(u), B.bidegree(v), B.bidegree(uv)
    assert buv == (bu[0] + bv[0], bu[1] + bv[1])


@settings(max_examples=40, deadline=None)
@given(_polys(RING3), _polys(RING3))
def test_initial_form_idempotent_multiplicative(f, g):
    block = (0, 2)
    if f:
        inf = f.initial_block_form(block)
        assert inf.initial_block_form(block) == inf
    if f and g:
        lhs = (f * g).initial_block_form(block)
        rhs = f.initial_block_form(block) * g.initial_block_form(block)
        # multiplicativity holds whenever the product of initial forms
        # does not cancel (exact coefficients make this the generic case)
        if rhs:
            assert lhs == rhs
