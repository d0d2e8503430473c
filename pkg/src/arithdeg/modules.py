"""Submodules of free modules: Groebner bases, syzygies, resolutions, Ext.

A free-module term is a pair (component, exponent tuple).  Module orders
compare such pairs; the default is position-over-term with degrevlex
underneath, and syzygy steps use the induced Schreyer order.

Module Groebner bases use the chain criterion only: the product criterion
is not valid for modules.
"""

import threading

from .errors import (AlgebraError, HomogeneityError, InternalConsistencyError,
                     ResourceLimitError, RingMismatchError)
from .groebner import DEFAULT_MAX_BASIS, DEFAULT_MAX_DEGREE
from .orders import DegRevLex
from .rings import Polynomial, mono_div, mono_divides, mono_lcm, mono_mul


class ModuleOrder:
    def key(self, term):
        raise NotImplementedError


class PositionOverTerm(ModuleOrder):
    """Component first (earlier generators are larger), then the term order."""

    def __init__(self, inner=None):
        self.inner = inner or DegRevLex()

    def key(self, term):
        c, m = term
        return (-c, self.inner.key(m))


class TermOverPosition(ModuleOrder):
    def __init__(self, inner=None):
        self.inner = inner or DegRevLex()

    def key(self, term):
        c, m = term
        return (self.inner.key(m), -c)


class SchreyerOrder(ModuleOrder):
    """Order on syzygy coordinates induced by the leads of a Groebner basis:
    u*E_i beats v*E_j when u*lead(g_i) beats v*lead(g_j), ties to smaller i."""

    def __init__(self, parent, leads):
        self.parent = parent
        self.leads = tuple(leads)

    def key(self, term):
        i, m = term
        lc, lmono = self.leads[i]
        return (self.parent.key((lc, mono_mul(m, lmono))), -i)


class Vec:
    """Element of a free module: map (component, monomial) -> coefficient."""

    __slots__ = ("ring", "rank", "terms")

    def __init__(self, ring, rank, terms, _clean=True):
        self.ring = ring
        self.rank = rank
        if _clean:
            clean = {}
            for t, c in terms.items():
                c = ring.field.coerce(c)
                if c:
                    clean[t] = c
            self.terms = clean
        else:
            self.terms = terms

    @classmethod
    def from_polys(cls, ring, polys):
        terms = {}
        for c, p in enumerate(polys):
            for m, v in p.terms.items():
                terms[(c, m)] = v
        return cls(ring, len(polys), terms, _clean=False)

    @classmethod
    def unit(cls, ring, rank, comp):
        return cls(ring, rank, {(comp, ring.zero_mono()): ring.field.one}, _clean=False)

    def to_polys(self):
        polys = [dict() for _ in range(self.rank)]
        for (c, m), v in self.terms.items():
            polys[c][m] = v
        return tuple(Polynomial(self.ring, d, _clean=False) for d in polys)

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        terms = dict(self.terms)
        for t, c in other.terms.items():
            s = terms.get(t, 0) + c
            if s:
                terms[t] = s
            elif t in terms:
                del terms[t]
        return Vec(self.ring, self.rank, terms, _clean=False)

    def __sub__(self, other):
        terms = dict(self.terms)
        for t, c in other.terms.items():
            s = terms.get(t, 0) - c
            if s:
                terms[t] = s
            elif t in terms:
                del terms[t]
        return Vec(self.ring, self.rank, terms, _clean=False)

    def __neg__(self):
        return Vec(self.ring, self.rank, {t: -c for t, c in self.terms.items()},
                   _clean=False)

    def term_mul(self, mono, coeff):
        return Vec(self.ring, self.rank,
                   {(c, mono_mul(m, mono)): v * coeff
                    for (c, m), v in self.terms.items()}, _clean=False)

    def poly_mul(self, p):
        out = Vec(self.ring, self.rank, {}, _clean=False)
        for m, c in p.terms.items():
            out = out + self.term_mul(m, c)
        return out

    def scale(self, coeff):
        return Vec(self.ring, self.rank,
                   {t: v * coeff for t, v in self.terms.items()}, _clean=False)

    def lead(self, morder):
        if not self.terms:
            raise AlgebraError("lead of zero vector")
        t = max(self.terms, key=morder.key)
        return t, self.terms[t]

    def monic(self, morder):
        _, c = self.lead(morder)
        if c == self.ring.field.one:
            return self
        return self.scale(self.ring.field.one / c)

    def max_degree(self):
        if not self.terms:
            return -1
        return max(self.ring.degree(m) for _, m in self.terms)

    def __eq__(self, other):
        return (isinstance(other, Vec) and self.rank == other.rank
                and self.terms == other.terms)

    __hash__ = None

    def __repr__(self):
        return "<%s>" % ", ".join(repr(p) for p in self.to_polys())


def vec_sort_key(v, morder):
    shape = tuple(sorted(((t, str(c)) for t, c in v.terms.items())))
    return (morder.key(v.lead(morder)[0]), shape)


def module_normal_form(v, basis, morder):
    """Division remainder of a vector by a list of vectors."""
    if not basis:
        return v
    leads = [g.lead(morder) for g in basis]
    remainder = {}
    work = dict(v.terms)
    while work:
        t = max(work, key=morder.key)
        c = work.pop(t)
        comp, m = t
        hit = None
        for ((gc, gm), gcoef), g in zip(leads, basis):
            if gc != comp:
                continue
            q = mono_div(m, gm)
            if q is not None:
                hit = (q, c / gcoef, g, (gc, gm))
                break
        if hit is None:
            remainder[t] = c
            continue
        q, ratio, g, glead = hit
        for (c2, m2), v2 in g.terms.items():
            if (c2, m2) == glead:
                continue
            tt = (c2, mono_mul(q, m2))
            s = work.get(tt, 0) - ratio * v2
            if s:
                work[tt] = s
            elif tt in work:
                del work[tt]
    return Vec(v.ring, v.rank, remainder, _clean=False)


def _module_pairs_from(leads, new_index):
    """Pairs (i, t) with matching lead component."""
    t = new_index
    comp = leads[t][0]
    return [(i, t) for i in range(t) if leads[i][0] == comp]


def module_buchberger(vecs, morder, max_basis=DEFAULT_MAX_BASIS,
                      max_degree=DEFAULT_MAX_DEGREE, reduce_result=True):
    """Groebner basis of the submodule generated by vecs."""
    vecs = [v for v in vecs if v]
    if all(len(v.terms) == 1 for v in vecs):
        # single-term vectors are already a Groebner basis
        return module_interreduce([v.monic(morder) for v in vecs], morder)
    G = []
    leads = []
    P = set()
    done = set()
    for v in vecs:
        G.append(v.monic(morder))
        leads.append(G[-1].lead(morder)[0])
        P.update(_module_pairs_from(leads, len(G) - 1))
    key_cache = {}
    while P:
        for ij in P:
            if ij not in key_cache:
                (ci, mi) = leads[ij[0]]
                (_, mj) = leads[ij[1]]
                key_cache[ij] = morder.key((ci, mono_lcm(mi, mj)))
        pair = min(P, key=key_cache.__getitem__)
        P.remove(pair)
        done.add(pair)
        i, j = pair
        (ci, mi) = leads[i]
        (cj, mj) = leads[j]
        coefi = G[i].terms[leads[i]]
        coefj = G[j].terms[leads[j]]
        lcm = mono_lcm(mi, mj)
        # chain criterion, sound form: skip only when both flanking pairs
        # were already processed
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            (ck, mk) = leads[k]
            if ck == ci and mono_divides(mk, lcm):
                if ((min(i, k), max(i, k)) in done
                        and (min(j, k), max(j, k)) in done):
                    skip = True
                    break
        if skip:
            continue
        one = G[i].ring.field.one
        s = (G[i].term_mul(mono_div(lcm, mi), one / coefi)
             - G[j].term_mul(mono_div(lcm, mj), one / coefj))
        r = module_normal_form(s, G, morder)
        if r:
            if r.max_degree() > max_degree:
                raise ResourceLimitError(
                    "module Groebner degree cap %d exceeded" % max_degree,
                    basis_size=len(G), degree=r.max_degree())
            G.append(r.monic(morder))
            leads.append(G[-1].lead(morder)[0])
            if len(G) > max_basis:
                raise ResourceLimitError(
                    "module Groebner size cap %d exceeded" % max_basis,
                    basis_size=len(G))
            P.update(_module_pairs_from(leads, len(G) - 1))
    if reduce_result:
        G = module_interreduce(G, morder)
    return G


def module_interreduce(G, morder):
    G = [g for g in G if g]
    G.sort(key=lambda g: morder.key(g.lead(morder)[0]))
    minimal = []
    for g in G:
        (c, m), _ = g.lead(morder)
        keep = True
        for h in minimal:
            (ch, mh), _ = h.lead(morder)
            if ch == c and mono_divides(mh, m):
                keep = False
                break
        if keep:
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = module_normal_form(g, others, morder) if others else g
        if r:
            reduced.append(r.monic(morder))
    reduced.sort(key=lambda g: morder.key(g.lead(morder)[0]))
    return reduced


def schreyer_syzygies(G, morder):
    """Syzygies of a Groebner basis G via the Schreyer construction.

    Every same-component S-pair contributes the syzygy
    m_i E_i - m_j E_j - sum q_k E_k where the S-vector divides out as
    sum q_k g_k.  The result generates the full syzygy module and is a
    Groebner basis for the returned Schreyer order.
    """
    ring = G[0].ring if G else None
    leads = [g.lead(morder) for g in G]
    sorder = SchreyerOrder(morder, [lt for lt, _ in leads])
    syz = []
    for i in range(len(G)):
        (ci, mi), coefi = leads[i]
        for j in range(i + 1, len(G)):
            (cj, mj), coefj = leads[j]
            if ci != cj:
                continue
            lcm = mono_lcm(mi, mj)
            one = ring.field.one
            qi, qj = mono_div(lcm, mi), mono_div(lcm, mj)
            s = G[i].term_mul(qi, one / coefi) - G[j].term_mul(qj, one / coefj)
            # track the division s = sum q_k g_k
            cof = {(i, qi): one / coefi, (j, qj): -(one / coefj)}
            work = dict(s.terms)
            while work:
                t = max(work, key=morder.key)
                c = work.pop(t)
                comp, m = t
                hit = None
                for k, ((gc, gm), gcoef) in enumerate(leads):
                    if gc != comp:
                        continue
                    q = mono_div(m, gm)
                    if q is not None:
                        hit = (k, q, c / gcoef)
                        break
                if hit is None:
                    raise InternalConsistencyError(
                        "S-vector of a Groebner basis did not reduce to zero")
                k, q, ratio = hit
                key = (k, q)
                prev = cof.get(key, 0)
                now = prev - ratio
                if now:
                    cof[key] = now
                elif key in cof:
                    del cof[key]
                for (c2, m2), v2 in G[k].terms.items():
                    if (c2, m2) == leads[k][0]:
                        continue
                    tt = (c2, mono_mul(q, m2))
                    val = work.get(tt, 0) - ratio * v2
                    if val:
                        work[tt] = val
                    elif tt in work:
                        del work[tt]
            vec = Vec(ring, len(G), {(k, q): v for (k, q), v in cof.items()})
            if vec:
                syz.append(vec)
    # minimalize w.r.t. the Schreyer order (still a basis of the kernel)
    syz = _minimalize(syz, sorder)
    return syz, sorder


def _minimalize(vecs, morder):
    vecs = sorted((v for v in vecs if v), key=lambda v: morder.key(v.lead(morder)[0]))
    minimal = []
    for v in vecs:
        (c, m), _ = v.lead(morder)
        keep = True
        for h in minimal:
            (ch, mh), _ = h.lead(morder)
            if ch == c and mono_divides(mh, m):
                keep = False
                break
        if keep:
            minimal.append(v)
    return minimal


def syzygies_of(columns, ring, rank, morder=None,
                max_basis=DEFAULT_MAX_BASIS, max_degree=DEFAULT_MAX_DEGREE):
    """Generators of the syzygy module of arbitrary columns in S^rank.

    Augmentation route: each column f_i becomes f_i + E_{rank+i} in
    S^(rank+a); position-over-term makes the leading block dominant, so
    basis elements living entirely in the trailing block are exactly the
    syzygies.
    """
    a = len(columns)
    if a == 0:
        return []
    morder = morder or PositionOverTerm()
    aug = []
    for i, col in enumerate(columns):
        terms = {}
        if isinstance(col, Vec):
            items = col.terms.items()
        else:
            items = Vec.from_polys(ring, col).terms.items()
        for (c, m), v in items:
            terms[(c, m)] = v
        terms[(rank + i, ring.zero_mono())] = ring.field.one
        aug.append(Vec(ring, rank + a, terms))
    G = module_buchberger(aug, morder, max_basis=max_basis, max_degree=max_degree)
    out = []
    for g in G:
        if all(c >= rank for (c, m) in g.terms):
            shifted = {(c - rank, m): v for (c, m), v in g.terms.items()}
            out.append(Vec(ring, a, shifted, _clean=False))
    return out


# ---------------------------------------------------------------------------
# presentations, complexes, resolutions, Ext

def _shift_add(shift, d):
    if isinstance(shift, tuple):
        return (shift[0] + d[0], shift[1] + d[1])
    return shift + d


class ModulePresentation:
    """Cokernel presentation: F/im(columns) with grading shifts on F.

    columns is a tuple of columns, each a tuple of `rank` polynomials.
    shifts[c] is the degree of the c-th free generator: an integer for
    graded rings, an (i, j) pair for bigraded ones.
    """

    __slots__ = ("ring", "rank", "columns", "shifts", "_cache", "_lock")

    def __init__(self, ring, rank, columns, shifts=None):
        self.ring = ring
        self.rank = int(rank)
        cols = []
        for col in columns:
            col = tuple(col)
            if len(col) != self.rank:
                raise AlgebraError("column length %d != rank %d" % (len(col), self.rank))
            for p in col:
                if p.ring != ring:
                    raise RingMismatchError("column entry over wrong ring")
            if any(p for p in col):
                cols.append(col)
        if shifts is None:
            zero = (0, 0) if ring.is_bigraded else 0
            shifts = tuple(zero for _ in range(self.rank))
        self.shifts = tuple(shifts)
        if len(self.shifts) != self.rank:
            raise AlgebraError("one shift per free generator required")
        morder = PositionOverTerm()
        cols.sort(key=lambda col: vec_sort_key(
            Vec(ring, self.rank,
                {(c, m): v for c, p in enumerate(col) for m, v in p.terms.items()},
                _clean=False),
            morder))
        self.columns = tuple(cols)
        self._cache = {}
        self._lock = threading.Lock()

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_ideal(cls, I):
        """The cyclic module S/I."""
        ring = I.ring
        return cls(ring, 1, [(g,) for g in I.gens])

    @classmethod
    def free(cls, ring, rank=1, shifts=None):
        return cls(ring, rank, [], shifts=shifts)

    @classmethod
    def zero(cls, ring):
        return cls(ring, 0, [])

    # -- basic structure ----------------------------------------------------

    def column_vecs(self):
        return [Vec(self.ring, self.rank,
                    {(c, m): v for c, p in enumerate(col) for m, v in p.terms.items()},
                    _clean=False)
                for col in self.columns]

    def _cached(self, key, build):
        got = self._cache.get(key)
        if got is not None:
            return got
        val = build()
        with self._lock:
            self._cache.setdefault(key, val)
        return self._cache[key]

    def gb(self, morder=None):
        morder = morder or PositionOverTerm()
        key = ("gb",)
        return self._cached(key, lambda: tuple(
            module_buchberger(self.column_vecs(), morder)))

    def vec_degree(self, v):
        """Common degree of a homogeneous vector, from the shifts."""
        degs = set()
        for (c, m) in v.terms:
            if self.ring.is_bigraded:
                degs.add(_shift_add(self.shifts[c], self.ring.bidegree(m)))
            else:
                degs.add(_shift_add(self.shifts[c], self.ring.degree(m)))
        if len(degs) > 1:
            raise HomogeneityError("vector %r is not homogeneous" % (v,))
        return degs.pop() if degs else None

    def is_homogeneous(self):
        try:
            for v in self.column_vecs():
                self.vec_degree(v)
        except HomogeneityError:
            return False
        return True

    def column_degrees(self):
        return [self.vec_degree(v) for v in self.column_vecs()]

    def is_zero_module(self):
        """True when the relations span every generator (cokernel = 0)."""
        if self.rank == 0:
            return True
        leads = self.initial_leads()
        return all(any(not any(m) for m in comp) for comp in leads)

    def initial_leads(self, morder=None):
        """Per-component minimal lead monomials of the relation submodule."""
        morder = morder or PositionOverTerm()
        key = ("leads",)

        def build():
            comps = [[] for _ in range(self.rank)]
            for g in self.gb(morder):
                (c, m), _ = g.lead(morder)
                comps[c].append(m)
            out = []
            for mons in comps:
                minimal = []
                for m in sorted(mons):
                    if all(not mono_divides(p, m) for p in minimal):
                        minimal.append(m)
                out.append(tuple(minimal))
            return tuple(out)
        return self._cached(key, build)

    def __repr__(self):
        return "ModulePresentation(rank=%d, %d relations over %r)" % (
            self.rank, len(self.columns), self.ring)


class ChainComplex:
    """Free complex d_1, d_2, ...; checked so consecutive maps compose to zero."""

    def __init__(self, ring, base_rank, base_shifts, differentials, level_shifts,
                 complete):
        self.ring = ring
        self.base_rank = base_rank
        self.base_shifts = tuple(base_shifts)
        self.differentials = list(differentials)
        self.level_shifts = [tuple(s) for s in level_shifts]
        self.complete = complete
        self._verify()

    @property
    def length(self):
        return len(self.differentials)

    def ranks(self):
        out = [self.base_rank]
        for d in self.differentials:
            out.append(len(d))
        return out

    def _verify(self):
        for k in range(len(self.differentials) - 1):
            d1 = self.differentials[k]      # columns in S^{r_k}
            d2 = self.differentials[k + 1]  # columns in S^{r_{k+1}}
            rank = self.base_rank if k == 0 else len(self.differentials[k - 1])
            for col in d2:
                acc = Vec(self.ring, rank, {})
                for t, p in enumerate(col):
                    if p:
                        acc = acc + Vec.from_polys(self.ring, d1[t]).poly_mul(p)
                if acc:
                    raise InternalConsistencyError(
                        "chain complex differentials do not compose to zero")


def free_resolution(pres, max_length):
    """Free resolution of coker(pres) by iterated Schreyer syzygies.

    The first differential is the module Groebner basis of the relation
    columns (same cokernel); each further step takes Schreyer syzygies,
    which generate the kernel exactly, so the complex is exact beyond
    degree zero.  Stops early once the syzygies vanish (complete=True).
    """
    if max_length < 1:
        raise AlgebraError("resolution length must be at least 1")
    ring = pres.ring
    vecs = pres.column_vecs()
    if not vecs:
        return ChainComplex(ring, pres.rank, pres.shifts, [], [], True)
    morder = PositionOverTerm()
    G = module_buchberger(vecs, morder)
    if not G:
        return ChainComplex(ring, pres.rank, pres.shifts, [], [], True)
    diffs = []
    shift_levels = []
    cur_shifts = pres.shifts
    cur_order = morder
    complete = False
    while True:
        # record the current GB as a differential
        cols = [g.to_polys() for g in G]
        degs = []
        for g in G:
            degs.append(_vec_degree_with(ring, g, cur_shifts))
        diffs.append(cols)
        shift_levels.append(tuple(degs))
        if len(diffs) >= max_length:
            break
        syz, sorder = schreyer_syzygies(G, cur_order)
        if not syz:
            complete = True
            break
        cur_shifts = tuple(degs)
        G = syz
        cur_order = sorder
    return ChainComplex(ring, pres.rank, pres.shifts, diffs, shift_levels, complete)


def _vec_degree_with(ring, v, shifts):
    degs = set()
    for (c, m) in v.terms:
        if ring.is_bigraded:
            degs.add(_shift_add(shifts[c], ring.bidegree(m)))
        else:
            degs.add(_shift_add(shifts[c], ring.degree(m)))
    if len(degs) > 1:
        raise HomogeneityError("inhomogeneous vector in resolution")
    return degs.pop() if degs else None


def _transpose(columns, rank, ring):
    """Columns of the transposed matrix (rank many, each of length len(columns))."""
    out = []
    for c in range(rank):
        col = tuple(columns[t][c] for t in range(len(columns)))
        out.append(col)
    return out


def _negate_shift(s):
    if isinstance(s, tuple):
        return (-s[0], -s[1])
    return -s


def resolution_for(pres, length):
    """Cached free resolution, extended monotonically on demand."""
    key = "_resolution"
    got = pres._cache.get(key)
    if got is not None and (got.complete or got.length >= length):
        return got
    res = free_resolution(pres, length)
    with pres._lock:
        prev = pres._cache.get(key)
        if prev is None or (not prev.complete and prev.length < res.length):
            pres._cache[key] = res
    return pres._cache[key]


def ext_presentation(pres, j):
    """Presentation of Ext^j(coker(pres), S) with dual grading shifts.

    Cohomology of the dualized resolution: kernel generators of the
    transposed (j+1)-st differential, with relations all vectors carrying
    them into the image of the transposed j-th differential.
    """
    if j < 0 or j > pres.ring.nvars:
        raise AlgebraError("Ext index %d out of range" % j)
    ring = pres.ring
    res = resolution_for(pres, j + 1)
    ranks = [pres.rank] + [len(d) for d in res.differentials]
    all_shifts = [pres.shifts] + res.level_shifts
    L = res.length
    if j > L:
        return ModulePresentation.zero(ring)
    r_j = ranks[j]
    dual_shifts_j = tuple(_negate_shift(s) for s in all_shifts[j])
    if r_j == 0:
        return ModulePresentation.zero(ring)
    # kernel of the transposed d_{j+1}
    if j == L:
        K = [Vec.unit(ring, r_j, c) for c in range(r_j)]
    else:
        phi_cols = _transpose(res.differentials[j], r_j, ring)  # r_j columns in S^{r_{j+1}}
        r_next = ranks[j + 1]
        K = syzygies_of(phi_cols, ring, r_next)
        K = [Vec(ring, r_j, v.terms, _clean=False) for v in K]
    if not K:
        return ModulePresentation.zero(ring)
    # image of the transposed d_j inside S^{r_j}
    if j == 0:
        psi_cols = []
    else:
        psi_cols = [Vec(ring, r_j,
                        {(c, m): v for c, p in enumerate(col) for m, v in p.terms.items()})
                    for col in _transpose(res.differentials[j - 1], ranks[j - 1], ring)]
    combined = list(K) + list(psi_cols)
    rels = syzygies_of(combined, ring, r_j)
    s = len(K)
    rel_cols = []
    for v in rels:
        kept = {(c, m): val for (c, m), val in v.terms.items() if c < s}
        w = Vec(ring, s, kept, _clean=False)
        if w:
            rel_cols.append(w.to_polys())
    gen_shifts = []
    for k in K:
        degs = set()
        for (c, m) in k.terms:
            if ring.is_bigraded:
                degs.add(_shift_add(dual_shifts_j[c], ring.bidegree(m)))
            else:
                degs.add(_shift_add(dual_shifts_j[c], ring.degree(m)))
        if len(degs) > 1:
            raise HomogeneityError("Ext kernel generator is not homogeneous")
        gen_shifts.append(degs.pop() if degs else (0, 0) if ring.is_bigraded else 0)
    return ModulePresentation(ring, s, rel_cols, shifts=tuple(gen_shifts))
