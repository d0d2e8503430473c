"""Tangent cones, Rees kernels, associated graded rings, and the double
construction GG = gr_m(gr_I).

Initial forms are computed by homogenization: balance the block degree with
a fresh variable t, saturate by t, take a Groebner basis for a t-dominant
weight order, then dehomogenize and keep lowest forms.  Every construction
is gated by an independent length oracle and errors out on mismatch rather
than returning silently wrong output.
"""

from .errors import (AlgebraError, InternalConsistencyError,
                     ResourceLimitError, UnsupportedInputError)
from .groebner import (IdealHandle, eliminate, extended_ring, fresh_names,
                       ideal_power, ideal_product, ideal_sum, inject,
                       intersect, maximal_ideal, project)
from .hilbert import artinian_length, dimension, hilbert_value
from .modules import ModulePresentation
from .orders import BlockOrder
from .rings import Polynomial, RingDescriptor


# ---------------------------------------------------------------------------
# initial forms by homogenization

def _block_degree(m, block):
    return sum(m[i] for i in block)


def initial_forms_ideal(I, block):
    """Ideal of lowest block-degree forms of all elements of I.

    Homogenize each generator in the block grading with a trailing t,
    saturate by t (this recovers the full homogenization), and compute a
    Groebner basis for an order in which the t-degree dominates: initial
    forms w.r.t. that weight are exactly t-power times the lowest block
    forms, so dehomogenizing the basis at t = 1 and taking lowest forms
    generates the initial-form ideal.
    """
    ring = I.ring
    if I.is_zero():
        return IdealHandle(ring, [])
    block = tuple(sorted(block))
    big = extended_ring(ring, fresh_names(ring, "t_", 1))
    t_index = big.nvars - 1
    t = big.gen(t_index)
    homogenized = []
    for g in I.gens:
        gb = inject(g, big)
        top = max(_block_degree(m, block) for m in gb.terms)
        terms = {}
        for m, c in gb.terms.items():
            d = _block_degree(m, block)
            mm = list(m)
            mm[t_index] = top - d
            terms[tuple(mm)] = c
        homogenized.append(Polynomial(big, terms, _clean=False))
    H = IdealHandle(big, homogenized, max_basis=I.max_basis,
                    max_degree=2 * I.max_degree)
    from .groebner import saturate
    Hs = saturate(H, t)
    order = BlockOrder([t_index], big.nvars)
    basis = Hs.groebner_basis(order)
    out = []
    for g in basis:
        deh = _dehomogenize(g, ring, t_index)
        if deh:
            out.append(deh.initial_block_form(block))
    return IdealHandle(ring, out, max_basis=I.max_basis, max_degree=I.max_degree)


def _dehomogenize(g, small_ring, t_index):
    terms = {}
    for m, c in g.terms.items():
        mm = m[:t_index]
        terms[mm] = terms.get(mm, 0) + c
    return Polynomial(small_ring, terms)


def tangent_cone(J, oracle_window=None):
    """gr_m of S/J at the origin: the ideal of lowest-degree forms.

    Mandatory gate: the Hilbert-Samuel function of the cone must match the
    one of J itself for every k in the certificate window.
    """
    ring = J.ring
    if J.is_zero():
        return IdealHandle(ring, [])
    tc = initial_forms_ideal(J, range(ring.nvars))
    if oracle_window is None:
        oracle_window = max((g.degree() for g in J.gens), default=1) + 2
    mring = maximal_ideal(ring)
    for k in range(oracle_window + 1):
        mk = ideal_power(mring, k + 1)
        left = artinian_length(ideal_sum(J, mk))
        right = artinian_length(ideal_sum(tc, mk))
        if left != right:
            raise InternalConsistencyError(
                "tangent cone fails the length oracle at k=%d: %d vs %d"
                % (k, left, right))
    return tc


# ---------------------------------------------------------------------------
# Rees kernel and associated graded presentation

class ReesPresentation:
    """Kernel data of S[y] -> (S/J)[t], y_j -> t*f_j."""

    __slots__ = ("base_ring", "extended", "kernel", "maps", "y_indices")

    def __init__(self, base_ring, extended, kernel, maps, y_indices):
        self.base_ring = base_ring
        self.extended = extended        # bigraded ring k[x-block; y-block]
        self.kernel = kernel            # IdealHandle in extended
        self.maps = tuple(maps)         # f_j as polynomials in base_ring
        self.y_indices = tuple(y_indices)

    def substitution_check(self):
        """Every kernel generator must vanish under y_j -> t*f_j modulo J."""
        base = self.base_ring
        big = extended_ring(base, fresh_names(base, "t_", 1))
        t = big.gen(big.nvars - 1)
        images = []
        pos = 0
        for i in range(self.extended.nvars):
            if i in self.y_indices:
                images.append(t * inject(self.maps[pos], big))
                pos += 1
            else:
                images.append(big.gen(i))
        jbig = IdealHandle(big, [inject(g, big) for g in self._j_gens()])
        for g in self.kernel.gens:
            img = g.substitute(big, images)
            if not jbig.contains(img):
                raise InternalConsistencyError(
                    "Rees kernel generator %r fails the substitution check" % (g,))
        return True

    def _j_gens(self):
        # generators of J are the kernel elements free of the y-variables
        out = []
        for g in self.kernel.gens:
            if all(all(m[i] == 0 for i in self.y_indices) for m in g.terms):
                out.append(project_to_base(g, self.base_ring, self.y_indices))
        return out


def project_to_base(g, base_ring, y_indices):
    ys = set(y_indices)
    terms = {}
    for m, c in g.terms.items():
        if any(m[i] for i in ys):
            raise AlgebraError("polynomial involves the adjoined variables")
        mm = tuple(e for i, e in enumerate(m) if i not in ys)
        terms[mm] = c
    return Polynomial(base_ring, terms, _clean=False)


def _gg_ring(base_ring, count):
    y_names = fresh_names(base_ring, "q", count)
    return RingDescriptor.bigraded(list(base_ring.names), y_names,
                                   field=base_ring.field)


def rees_kernel(J, I):
    """Presentation kernel of the Rees construction for I over S/J,
    by eliminating t from (y_j - t f_j) + J."""
    ring = J.ring
    fs = list(I.gens)
    if not fs:
        raise AlgebraError("Rees construction needs at least one ideal generator")
    m = len(fs)
    gg = _gg_ring(ring, m)
    y_indices = tuple(gg.y_block)
    work = extended_ring(gg, fresh_names(gg, "t_", 1))
    t_index = work.nvars - 1
    t = work.gen(t_index)

    def lift_base(p):
        # base ring variables sit first in gg, then in work
        return inject(_base_to_gg(p, gg), work)

    gens = []
    for j, f in enumerate(fs):
        yj = work.gen(y_indices[j])
        gens.append(yj - t * lift_base(f))
    for g in J.gens:
        gens.append(lift_base(g))
    H = IdealHandle(work, gens, max_basis=J.max_basis,
                    max_degree=2 * J.max_degree)
    E = eliminate(H, [t_index])
    K = IdealHandle(gg, [project(g, gg) for g in E.gens],
                    max_basis=J.max_basis, max_degree=J.max_degree)
    rees = ReesPresentation(ring, gg, K, fs, y_indices)
    rees.substitution_check()
    return rees


def _base_to_gg(p, gg):
    terms = {}
    nbase = len(gg.x_block)
    for m, c in p.terms.items():
        terms[m + (0,) * (gg.nvars - nbase)] = c
    return Polynomial(gg, terms, _clean=False)


class GradedConstruction:
    """Presentation of gr_I(S/J) (and optionally GG) as a bigraded quotient."""

    __slots__ = ("ring", "ideal", "rees", "J", "I")

    def __init__(self, ring, ideal_handle, rees, J, I):
        self.ring = ring
        self.ideal = ideal_handle
        self.rees = rees
        self.J = J
        self.I = I

    def presentation(self):
        return ModulePresentation.from_ideal(self.ideal)

    def __repr__(self):
        return "GradedConstruction(%r over %r)" % (self.ideal, self.ring)


def assoc_graded(J, I):
    """gr_I(S/J) = k[x; y]/L with L = rees kernel + I + J, y-degree grading."""
    rees = rees_kernel(J, I)
    gg = rees.extended
    gens = list(rees.kernel.gens)
    for f in I.gens:
        gens.append(_base_to_gg(f, gg))
    for g in J.gens:
        gens.append(_base_to_gg(g, gg))
    L = IdealHandle(gg, gens, max_basis=J.max_basis, max_degree=J.max_degree)
    construction = GradedConstruction(gg, L, rees, J, I)
    # dimension transfer gate: dim gr_I(S/J) = dim S/J
    if dimension(L) != dimension(J):
        raise InternalConsistencyError(
            "dimension changed across the associated graded construction")
    return construction


class BigradedPresentation:
    """GG(S/J) as a bigraded quotient k[x; y]/L'."""

    __slots__ = ("ring", "ideal", "gr", "J", "I")

    def __init__(self, ring, ideal_handle, gr, J, I):
        self.ring = ring
        self.ideal = ideal_handle
        self.gr = gr
        self.J = J
        self.I = I

    def presentation(self):
        return ModulePresentation.from_ideal(self.ideal)

    def hilbert(self, i, j):
        return hilbert_value(self.ideal, (i, j))

    def __repr__(self):
        return "GG(%r)" % (self.ideal,)


def gg_presentation(J, I, gate_rect=None):
    """gr_m(gr_I(S/J)) as a bigraded quotient, validated against the direct
    bifiltration lengths on the certificate rectangle."""
    gr = assoc_graded(J, I)
    gg_ring = gr.ring
    Lp = initial_forms_ideal(gr.ideal, gg_ring.x_block)
    if not Lp.is_bihomogeneous():
        raise InternalConsistencyError("GG presentation ideal is not bihomogeneous")
    out = BigradedPresentation(gg_ring, Lp, gr, J, I)
    if gate_rect is None:
        d = max(dimension(J), 0)
        gate_rect = (d + 2, d + 2)
    _gate_gg_hilbert(out, gate_rect)
    return out


def _gate_gg_hilbert(gg, rect):
    """hilbert_value of the presentation == direct bifiltration derivative."""
    J, I = gg.J, gg.I
    ring = J.ring
    mring = maximal_ideal(ring)
    for i in range(rect[0] + 1):
        for j in range(rect[1] + 1):
            predicted = gg.hilbert(i, j)
            ij = ideal_product(ideal_power(mring, i), ideal_power(I, j))
            ij1 = ideal_product(ideal_power(mring, i + 1), ideal_power(I, j))
            upper = ideal_sum(J, ij, ideal_power(I, j + 1))
            lower = ideal_sum(J, ij1, ideal_power(I, j + 1))
            direct = relative_length(upper, lower, ring, kill_bound=1)
            if predicted != direct:
                raise InternalConsistencyError(
                    "GG Hilbert gate fails at (%d,%d): presentation %d, direct %d"
                    % (i, j, predicted, direct))
    return True


# ---------------------------------------------------------------------------
# direct length oracles

def relative_length(U, V, ring=None, kill_bound=None):
    """Length of U/V for nested ideals V <= U with finite quotient.

    Homogeneous inputs sum Hilbert-function differences degreewise (exact:
    the quotient is generated in degrees up to its generators and killed
    past the kill bound).  Otherwise both sides must become Artinian after
    adding no power of m, i.e. S/V is already Artinian, and plain length
    differences apply.
    """
    ring = ring or U.ring
    if not all(V_gen_in(U, g) for g in V.gens):
        raise AlgebraError("relative length needs V inside U")
    if U.is_homogeneous() and V.is_homogeneous():
        hU = lambda d: hilbert_value(U, d)
        hV = lambda d: hilbert_value(V, d)
        top = max((g.degree() for g in U.gens), default=0)
        if kill_bound is None:
            kill_bound = _kill_bound(U, V, ring)
        total = 0
        for d in range(0, top + kill_bound + 1):
            total += hV(d) - hU(d)
        return total
    if dimension(V) <= 0:
        return artinian_length(V) - artinian_length(U)
    raise UnsupportedInputError(
        "relative length of inhomogeneous non-Artinian quotient is not supported")


def V_gen_in(U, g):
    return U.contains(g)


def _kill_bound(U, V, ring, cap=40):
    """Smallest c with m^c * U <= V, by direct membership tests."""
    mring = maximal_ideal(ring)
    for c in range(cap + 1):
        mc = ideal_power(mring, c)
        ok = all(V.contains(a * b) for a in mc.gens for b in U.gens)
        if ok:
            return c
    raise ResourceLimitError("no kill bound below %d for the relative length" % cap)


def bifiltration_length(J, I, i, j):
    """Length of S/(J + m^(i+1) + I^(j+1)): the first summand of the double
    sum transform of GG."""
    ring = J.ring
    mring = maximal_ideal(ring)
    total = ideal_sum(J, ideal_power(mring, i + 1), ideal_power(I, j + 1))
    return artinian_length(total)


def h11_direct(J, I, i, j):
    """The double sum transform of the GG Hilbert function, evaluated by
    direct length computations:
    l(M/(m^(i+1)+I^(j+1))M) plus, for k <= j, the correction
    l((I^k cap (m^(i+1)+I^(k+1)))/(m^(i+1) I^k + I^(k+1))) around J."""
    ring = J.ring
    mring = maximal_ideal(ring)
    total = bifiltration_length(J, I, i, j)
    mi1 = ideal_power(mring, i + 1)
    for k in range(j + 1):
        ik = ideal_power(I, k)
        ik1 = ideal_power(I, k + 1)
        upper = intersect(ideal_sum(ik, J), ideal_sum(mi1, ik1, J))
        lower = ideal_sum(ideal_product(mi1, ik), ik1, J)
        total += relative_length(upper, lower, ring, kill_bound=i + 1)
    return total
