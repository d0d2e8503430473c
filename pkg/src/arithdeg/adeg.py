"""Arithmetic degrees (graded, bigraded, and local flavors) and the harness
checking the main inequality adeg_r(gr_M(gr_I A)) >= sum_k (ladeg_r)_k plus
its corollaries.

Two independent pipelines feed the same numbers:
  * the Ext route: adeg_i(M) = e_i(Ext^(n-i)(M, S)), provenance "ext";
  * the standard-pair count for monomial ideals, provenance "standard-pairs";
  * Hilbert-Samuel interpolation for inhomogeneous local items, "samuel".
Their agreement on the monomial corpus is the central oracle equivalence.
"""

from .errors import (AlgebraError, TheoremViolationError,
                     UnsupportedInputError)
from .constructions import gg_presentation
from .groebner import IdealHandle
from .hilbert import (as_presentation, classical_multiplicity, dimension,
                      ee_vector, samuel_multiplicity)
from .modules import ext_presentation
from .monomials import decompose, local_length_by_pairs, adeg_monomial
from .numerical import MultiplicityVector
from .rings import Polynomial, RingDescriptor


# ---------------------------------------------------------------------------
# regrading and pruning helpers

def regrade_total(I):
    """View a bigraded quotient ideal in the same variables graded totally."""
    ring = I.ring
    flat = RingDescriptor(ring.names, field=ring.field)
    gens = [Polynomial(flat, dict(g.terms)) for g in I.gens]
    return IdealHandle(flat, gens, max_basis=I.max_basis, max_degree=I.max_degree)


def prune_coordinate_variables(I):
    """Remove variables that appear as pure generators of I.

    A generator c*x_i lets us mod out x_i: every other generator loses its
    x_i-terms and the variable leaves the ring.  The quotient ring, its
    associated primes, dimensions, and multiplicities are unchanged, while
    Ext computations shrink dramatically (important when I = m, where the
    whole x-block dies in GG).
    """
    ring = I.ring
    gens = list(I.gens)
    alive = list(range(ring.nvars))
    changed = True
    while changed:
        changed = False
        kill = None
        for g in gens:
            if len(g.terms) == 1:
                m = next(iter(g.terms))
                if sum(m) == 1:
                    kill = m.index(1)
                    break
        if kill is None:
            break
        changed = True
        new_gens = []
        for g in gens:
            terms = {m: c for m, c in g.terms.items() if m[kill] == 0}
            if terms:
                new_gens.append(Polynomial(ring, terms, _clean=False))
        gens = new_gens
        alive.remove(kill)
        if len(alive) == 0:
            break
    if len(alive) == ring.nvars:
        return I
    if not alive:
        # everything died: the quotient is the base field k = k[v]/(v)
        small = RingDescriptor((ring.names[0],), field=ring.field)
        return IdealHandle(small, [small.gen(0)])
    names = tuple(ring.names[i] for i in alive)
    weights = tuple(ring.weights[i] for i in alive)
    small = RingDescriptor(names, field=ring.field, weights=weights)
    out = []
    for g in gens:
        terms = {tuple(m[i] for i in alive): c for m, c in g.terms.items()}
        out.append(Polynomial(small, terms))
    return IdealHandle(small, out, max_basis=I.max_basis, max_degree=I.max_degree)


# ---------------------------------------------------------------------------
# reports

class AdegReport:
    """Per-dimension arithmetic degrees with provenance per entry."""

    def __init__(self, entries, provenance):
        self.entries = dict(entries)          # i -> int or MultiplicityVector
        self.provenance = dict(provenance)    # i -> str

    def value(self, i):
        return self.entries.get(i, 0)

    def table(self):
        return {i: self.entries[i] for i in sorted(self.entries)}

    def check_invariants(self, dim, nonzero_module):
        for i, v in self.entries.items():
            val = v.total() if isinstance(v, MultiplicityVector) else v
            if val < 0:
                raise AlgebraError("negative arithmetic degree at i=%d" % i)
        if nonzero_module and dim >= 0:
            top = self.entries.get(dim, 0)
            val = top.total() if isinstance(top, MultiplicityVector) else top
            if val <= 0:
                raise AlgebraError("vanishing top arithmetic degree")
        return True

    def __repr__(self):
        return "AdegReport(%r)" % (self.table(),)


# ---------------------------------------------------------------------------
# the three degree flavors

def adeg_graded(M, i):
    """Graded arithmetic degree by the Ext route:
    e_i of Ext^(n-i)(M, S)."""
    pres = as_presentation(M)
    n = pres.ring.nvars
    j = n - i
    if j < 0 or i < 0:
        return 0
    ext = ext_presentation(pres, j)
    if ext.rank == 0:
        return 0
    return classical_multiplicity(ext, i)


def adeg_report_ext(M):
    """Ext-route arithmetic degrees for every dimension 0..n."""
    pres = as_presentation(M)
    n = pres.ring.nvars
    entries = {}
    prov = {}
    for i in range(n + 1):
        entries[i] = adeg_graded(pres, i)
        prov[i] = "ext"
    report = AdegReport(entries, prov)
    d = dimension(pres)
    report.check_invariants(d, d >= 0)
    return report


def adeg_report_monomial(I):
    """Standard-pair route for a monomial ideal (ground truth)."""
    values = adeg_monomial(I)
    entries = {i: v for i, v in enumerate(values)}
    prov = {i: "standard-pairs" for i in entries}
    return AdegReport(entries, prov)


def biadeg(M, i):
    """Bigraded arithmetic degree: ee_i of the bigraded Ext module."""
    pres = as_presentation(M)
    n = pres.ring.nvars
    j = n - i
    if j < 0 or i < 0:
        return MultiplicityVector.zero(max(i, 0))
    ext = ext_presentation(pres, j)
    if ext.rank == 0:
        return MultiplicityVector.zero(i)
    return ee_vector(ext, i)


# ---------------------------------------------------------------------------
# GG-based multiplicities (cached per input pair)

_GG_CACHE = {}


def _ideal_sig(I):
    return (I.ring.signature(),
            tuple(tuple(sorted((m, str(c)) for m, c in g.terms.items()))
                  for g in I.gens))


def cached_gg(J, I):
    key = (_ideal_sig(J), _ideal_sig(I))
    if key not in _GG_CACHE:
        _GG_CACHE[key] = gg_presentation(J, I)
    return _GG_CACHE[key]


def gmult(J, I, i):
    """Generalized multiplicity: ee_i of GG(S/J) w.r.t. I."""
    gg = cached_gg(J, I)
    return ee_vector(gg.ideal, i)


def gmult_report(J, I):
    gg = cached_gg(J, I)
    d = dimension(gg.ideal)
    entries = {}
    for i in range(max(d, 0) + 1):
        entries[i] = ee_vector(gg.ideal, i)
    return AdegReport(entries, {i: "gg" for i in entries})


def ladeg(J, I, i, meta=None):
    """Local arithmetic degree: sum of local lengths times ee_i(GG(A/p))
    over the i-dimensional associated primes of S/J.

    Monomial J uses the combinatorial oracle for both the primes and the
    local lengths.  Non-monomial J needs metadata certifying it prime (the
    corpus route); otherwise the missing primary decomposition is reported.
    """
    meta = meta or {}
    ring = J.ring
    n = ring.nvars
    if J.is_monomial() and not J.is_zero():
        dec = decompose(J)
        total = MultiplicityVector.zero(i)
        for supp in dec.associated_primes:
            if n - len(supp) != i:
                continue
            length = local_length_by_pairs(J, supp)
            if length == 0:
                continue
            p = IdealHandle(ring, [ring.gen(k) for k in sorted(supp)])
            vec = gmult(p, I, i)
            total = total + vec.scale(length)
        return total
    if J.is_zero() or meta.get("prime"):
        d = dimension(J)
        if i == d:
            return gmult(J, I, i)
        return MultiplicityVector.zero(i)
    raise UnsupportedInputError(
        "ladeg needs the associated primes of S/J: supply monomial input or "
        "corpus metadata marking the ideal prime")


# ---------------------------------------------------------------------------
# verification records and the harness

class VerificationRecord:
    """Everything the corpus runner needs to judge one (J, I) pair."""

    def __init__(self, label, lhs, rhs, cor1_gr, cor1_a, embedded_a,
                 embedded_checked, equidimensional, passed, detail=""):
        self.label = label
        self.lhs = dict(lhs)                  # r -> adeg_r(gr_M(gr_I A))
        self.rhs = dict(rhs)                  # r -> sum_k (ladeg_r)_k
        self.cor1_gr = dict(cor1_gr)          # i -> adeg_i(gr_I A)
        self.cor1_a = dict(cor1_a)            # i -> adeg_i(A)
        self.embedded_a = list(embedded_a)    # dims of embedded primes of A
        self.embedded_checked = embedded_checked
        self.equidimensional = equidimensional
        self.passed = passed
        self.detail = detail

    def as_dict(self):
        return {
            "label": self.label,
            "theorem_lhs": {str(k): v for k, v in sorted(self.lhs.items())},
            "theorem_rhs": {str(k): v for k, v in sorted(self.rhs.items())},
            "corollary1_gr": {str(k): v for k, v in sorted(self.cor1_gr.items())},
            "corollary1_a": {str(k): v for k, v in sorted(self.cor1_a.items())},
            "embedded_dims_a": self.embedded_a,
            "embedded_checked": self.embedded_checked,
            "equidimensional": self.equidimensional,
            "passed": self.passed,
            "detail": self.detail,
        }

    def __repr__(self):
        return "VerificationRecord(%s, passed=%s)" % (self.label, self.passed)


def _adeg_of_ring_quotient(J, meta):
    """adeg_i(S/J) by the appropriate pipeline, as a plain table i -> int."""
    meta = meta or {}
    ring = J.ring
    if J.is_monomial():
        rep = adeg_report_monomial(J)
        return {i: rep.value(i) for i in range(ring.nvars + 1)}, "standard-pairs"
    if J.is_homogeneous():
        rep = adeg_report_ext(J)
        return {i: rep.value(i) for i in range(ring.nvars + 1)}, "ext"
    if meta.get("prime"):
        # a domain: single associated prime, local length one, Samuel top
        e, d, _cert = samuel_multiplicity(J)
        table = {i: 0 for i in range(ring.nvars + 1)}
        table[d] = e
        return table, "samuel"
    raise UnsupportedInputError(
        "adeg of an inhomogeneous non-prime quotient needs decomposition data")


def _adeg_of_graded_ideal(I):
    """Ext-route adeg table of a quotient by a totally graded ideal,
    after pruning dead coordinate variables.

    Generator lists are canonicalized through the reduced Groebner basis
    first: an ideal can be graded even when handed redundant inhomogeneous
    generators (gr_m presentations do this), and a reduced basis of a
    graded ideal is graded.
    """
    if not I.is_homogeneous():
        I = IdealHandle(I.ring, list(I.groebner_basis()),
                        max_basis=I.max_basis, max_degree=I.max_degree)
    if not I.is_homogeneous():
        raise UnsupportedInputError(
            "arithmetic degree of an inhomogeneous presentation: the corpus "
            "restricts to pairs whose graded sides are total-degree graded")
    pruned = prune_coordinate_variables(I)
    rep = adeg_report_ext(pruned)
    return {i: rep.value(i) for i in range(pruned.ring.nvars + 1)}


def verify(J, I, meta=None, label=None):
    """Check the main inequality and both corollaries for one pair.

    Raises TheoremViolationError on any failed inequality: the statements
    are proved, so a violation is an implementation bug and the record
    rides along for the reproducer.
    """
    meta = meta or {}
    label = label or "verify"
    ring = J.ring
    gg = cached_gg(J, I)

    # theorem: LHS via Ext on the total regrading of GG
    gg_total = regrade_total(gg.ideal)
    lhs_table = _adeg_of_graded_ideal(gg_total)

    # RHS: local arithmetic degrees
    dims = max(dimension(J), 0)
    rhs_table = {}
    for r in range(max(dims, max(lhs_table) if lhs_table else 0) + 1):
        vec = ladeg(J, I, r, meta=meta)
        rhs_table[r] = vec.total()

    failures = []
    for r in sorted(set(lhs_table) | set(rhs_table)):
        lv = lhs_table.get(r, 0)
        rv = rhs_table.get(r, 0)
        if lv < rv:
            failures.append("theorem fails at r=%d: %d < %d" % (r, lv, rv))

    # corollary 1: adeg_i(gr_I A) >= adeg_i(A)
    gr = cached_gg(J, I).gr
    gr_total = regrade_total(gr.ideal)
    cor1_gr = _adeg_of_graded_ideal(gr_total)
    cor1_a, _prov = _adeg_of_ring_quotient(J, meta)
    for i in sorted(set(cor1_gr) | set(cor1_a)):
        gv = cor1_gr.get(i, 0)
        av = cor1_a.get(i, 0)
        if gv < av:
            failures.append("corollary 1 fails at i=%d: %d < %d" % (i, gv, av))

    # corollary 2: embedded primes propagate for equidimensional A
    embedded_dims = []
    equidim = meta.get("equidimensional")
    embedded_checked = False
    if J.is_monomial() and not J.is_zero():
        dec = decompose(J)
        n = ring.nvars
        dims_minimal = {n - len(p) for p in dec.minimal_primes}
        equidim = len(dims_minimal) == 1
        embedded_dims = sorted({n - len(p) for p in dec.embedded_primes})
    elif meta.get("prime"):
        equidim = True
    if equidim and embedded_dims:
        embedded_checked = True
        for i in embedded_dims:
            if cor1_gr.get(i, 0) <= 0:
                failures.append(
                    "corollary 2 fails: embedded dimension %d not visible in gr" % i)

    record = VerificationRecord(
        label, lhs_table, rhs_table, cor1_gr, cor1_a, embedded_dims,
        embedded_checked, bool(equidim), not failures,
        detail="; ".join(failures))
    if failures:
        raise TheoremViolationError(
            "verification failed for %s: %s" % (label, record.detail),
            record=record)
    return record
