"""Hilbert functions, polynomials, dimensions, and multiplicities."""

import pytest

from arithdeg.errors import HomogeneityError, NotBigradedError
from arithdeg.groebner import IdealHandle
from arithdeg.hilbert import (artinian_length, classical_multiplicity,
                              cumulative_polynomial, dimension, ee_vector,
                              h11_polynomial, h11_table, hilbert_polynomial,
                              hilbert_samuel, hilbert_value,
                              hilbert_value_bruteforce, relevant_dimension,
                              samuel_multiplicity)
from arithdeg.modules import ModulePresentation
from arithdeg.numerical import MultiplicityVector
from arithdeg.rings import Polynomial, RingDescriptor


@pytest.fixture
def R():
    return RingDescriptor.graded("x,y")


@pytest.fixture
def B():
    return RingDescriptor.bigraded("x", "y")


def test_hilbert_value_free():
    R3 = RingDescriptor.graded("x,y,z")
    assert hilbert_value(IdealHandle(R3, []), 3) == 10


def test_hilbert_value_staircase(R):
    x, y = R.gens()
    I = IdealHandle(R, [x ** 2, x * y])
    assert [hilbert_value(I, d) for d in range(6)] == [1, 2, 1, 1, 1, 1]


def test_hilbert_value_bigraded_free(B):
    free = IdealHandle(B, [])
    assert all(hilbert_value(free, (i, j)) == 1 for i in range(4) for j in range(4))


def test_homogeneity_error(R):
    x, y = R.gens()
    with pytest.raises(HomogeneityError):
        hilbert_value(IdealHandle(R, [y ** 2 - x ** 3]), 2)


def test_bruteforce_equivalence(R):
    x, y = R.gens()
    for gens in ([x ** 2, x * y], [x * y], [x ** 2 - y ** 2, x * y + y ** 2],
                 [x ** 3 - y ** 3], []):
        I = IdealHandle(R, gens)
        for d in range(7):
            assert hilbert_value(I, d) == hilbert_value_bruteforce(I, d)


def test_bruteforce_equivalence_bigraded(B):
    xb, yb = B.gens()
    I = IdealHandle(B, [xb * yb])
    for i in range(4):
        for j in range(4):
            assert hilbert_value(I, (i, j)) == hilbert_value_bruteforce(I, (i, j))


def test_hilbert_polynomial_free(R):
    P, cert = hilbert_polynomial(IdealHandle(R, []))
    assert [P(d) for d in range(3)] == [1, 2, 3]
    assert P.coeffs == (1, 1)   # C(d,1) + 1 = d + 1


def test_hilbert_polynomial_artinian_direction(R):
    x, y = R.gens()
    P, cert = hilbert_polynomial(IdealHandle(R, [x ** 2, x * y]))
    assert P.coeffs == (1,)
    assert cert.window == 3


def test_hilbert_polynomial_bigraded(B):
    xb, _ = B.gens()
    P, cert = hilbert_polynomial(IdealHandle(B, [xb]), bigraded=True)
    # on the stable rectangle h = 0 for i >= 1
    assert P.is_zero()


def test_dimension_examples(R):
    x, y = R.gens()
    assert dimension(IdealHandle(R, [x ** 2, x * y])) == 1
    assert dimension(IdealHandle(R, [])) == 2
    assert dimension(IdealHandle(R, [x, y])) == 0
    assert dimension(IdealHandle(R, [R.one()])) == -1


def test_relevant_dimension(B):
    xb, yb = B.gens()
    assert relevant_dimension(IdealHandle(B, [])) == 2
    assert relevant_dimension(IdealHandle(B, [xb * yb])) == -1
    # in k[x;y] any proper quotient is killed by a power of A_+ = (xy)
    assert relevant_dimension(IdealHandle(B, [xb])) == -1
    # a relevant quotient needs room on both sides
    B4 = RingDescriptor.bigraded("x1,x2", "y1,y2")
    x1, x2, y1, y2 = B4.gens()
    assert relevant_dimension(IdealHandle(B4, [])) == 4
    assert relevant_dimension(IdealHandle(B4, [x1, y1])) == 2
    R = RingDescriptor.graded("x,y")
    with pytest.raises(NotBigradedError):
        relevant_dimension(IdealHandle(R, []))


def test_ee_vectors(B):
    xb, yb = B.gens()
    free = IdealHandle(B, [])
    assert ee_vector(free, 2) == MultiplicityVector(2, (0, 1, 0))
    assert ee_vector(free, 1).is_zero()
    quotient = IdealHandle(B, [xb])
    assert ee_vector(quotient, 1) == MultiplicityVector(1, (1, 0))
    zero_mod = IdealHandle(B, [B.one()])
    for q in range(3):
        assert ee_vector(zero_mod, q).is_zero()


def test_ee_additive_on_direct_sums(B):
    xb, yb = B.gens()
    # S/(x) (+) S/(x): block-diagonal presentation
    two = ModulePresentation(B, 2, [(xb, B.zero()), (B.zero(), xb)])
    one = IdealHandle(B, [xb])
    v2 = ee_vector(two, 1)
    v1 = ee_vector(one, 1)
    assert v2 == v1 + v1
    # mixed dimensions: S/(x) (+) S/(x,y) at the level of the larger part
    mixed = ModulePresentation(B, 2, [(xb, B.zero()), (B.zero(), xb),
                                      (B.zero(), yb)])
    assert ee_vector(mixed, 1) == v1 + ee_vector(IdealHandle(B, [xb, yb]), 1)


def test_prop_hilb_degree(B):
    """deg P_M = rd M - 2 for relevant cyclic modules; deg P^(1,1) = dim."""
    B4 = RingDescriptor.bigraded("x1,x2", "y1,y2")
    x1, x2, y1, y2 = B4.gens()
    for gens, rd_want in (([], 4), ([x1, y1], 2), ([x1 * y1], 3)):
        I = IdealHandle(B4, gens)
        rd = relevant_dimension(I)
        assert rd == rd_want
        P, _ = hilbert_polynomial(I, bigraded=True)
        assert P.total_degree == rd - 2
    # irrelevant quotients still satisfy deg P^(1,1) = dim
    xb, yb = B.gens()
    for gens in ([], [xb ** 2], [xb * yb ** 2]):
        I = IdealHandle(B, gens)
        P11, _ = h11_polynomial(I)
        assert P11.total_degree == dimension(I)


def test_two_new_variables_identity(B):
    """h^(1,1) of M equals the plain Hilbert function of M with one extra
    variable of each bidegree adjoined."""
    xb, yb = B.gens()
    I = IdealHandle(B, [xb ** 2])
    big = RingDescriptor.bigraded("x,u", "y,v")
    lift = {}
    # x -> index 0, y -> index 2 in the big ring
    gens = []
    for g in I.gens:
        terms = {}
        for (a, b), c in g.terms.items():
            terms[(a, 0, b, 0)] = c
        gens.append(Polynomial(big, terms))
    Ibig = IdealHandle(big, gens)
    table = h11_table(I, 5, 5)
    for i in range(6):
        for j in range(6):
            assert table[(i, j)] == hilbert_value(Ibig, (i, j))


def test_prop_add_over_associated_primes():
    """ee_q(M) = sum of local lengths times ee_q(A/p) over top-dimensional
    associated primes, on bigraded monomial quotients where both sides come
    from the combinatorial oracle."""
    from arithdeg.monomials import decompose, local_length_by_pairs
    B4 = RingDescriptor.bigraded("x1,x2", "y1,y2")
    x1, x2, y1, y2 = B4.gens()
    cases = [
        [x1 * y1],
        [x1 ** 2, x1 * x2],
        [x1 * y1, x1 * y2],
        [x1 ** 2 * y1],
    ]
    for gens in cases:
        J = IdealHandle(B4, gens)
        d = dimension(J)
        lhs = ee_vector(J, d)
        dec = decompose(J)
        total = MultiplicityVector.zero(d)
        n = B4.nvars
        for supp in dec.associated_primes:
            if n - len(supp) != d:
                continue
            length = local_length_by_pairs(J, supp)
            p = IdealHandle(B4, [B4.gen(k) for k in sorted(supp)])
            total = total + ee_vector(p, d).scale(length)
        assert lhs == total


def test_classical_multiplicity(R):
    x, y = R.gens()
    assert classical_multiplicity(IdealHandle(R, [x * y]), 1) == 2
    assert classical_multiplicity(IdealHandle(R, [x * y]), 2) == 0
    assert classical_multiplicity(IdealHandle(R, []), 2) == 1
    # finite length: e_0 is the length
    assert classical_multiplicity(IdealHandle(R, [x ** 2, y ** 2]), 0) == 4


def test_cumulative_polynomial(R):
    x, y = R.gens()
    P, _ = cumulative_polynomial(IdealHandle(R, [x * y]))
    # h = 1, 2, 2, ... so the sums are 2k + 1 eventually
    for k in range(4, 8):
        assert P(k) == 2 * k + 1
    assert P.coeffs[-1] == 2


def test_hilbert_samuel_cusp(R):
    x, y = R.gens()
    cusp = IdealHandle(R, [y ** 2 - x ** 3])
    values = [hilbert_samuel(cusp, k) for k in range(7)]
    assert values == [1, 3, 5, 7, 9, 11, 13]
    e, d, cert = samuel_multiplicity(cusp)
    assert (e, d) == (2, 1)


def test_samuel_vs_tangent_cone(R):
    from arithdeg.constructions import tangent_cone
    x, y = R.gens()
    cusp = IdealHandle(R, [y ** 2 - x ** 3])
    tc = tangent_cone(cusp)
    assert classical_multiplicity(tc, 1) == 2


def test_artinian_length(R):
    x, y = R.gens()
    assert artinian_length(IdealHandle(R, [x ** 2, x * y, y ** 2])) == 3
    assert artinian_length(IdealHandle(R, [x, y])) == 1
    with pytest.raises(Exception):
        artinian_length(IdealHandle(R, [x]))


def test_hilbert_shifted_module(R):
    x, y = R.gens()
    # S(-2) (+) S via shifts: generators in degrees 2 and 0
    M = ModulePresentation(R, 2, [], shifts=(2, 0))
    assert hilbert_value(M, 0) == 1
    assert hilbert_value(M, 2) == 4   # 1 (degree-0 piece of S(-2)) + 3
    assert hilbert_value_bruteforce(M, 2) == 4
