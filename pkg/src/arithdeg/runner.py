"""Execute parsed session scripts and shape JSON-safe results.

Outputs are deterministic: fixed key order, canonical generator sorting,
and integers rendered as decimal strings once they leave the float-safe
range (exact arithmetic can exceed 2^53).
"""

import time
from concurrent.futures import ThreadPoolExecutor

from .adeg import (_adeg_of_ring_quotient, cached_gg, gmult_report, ladeg,
                   verify)
from .errors import AlgebraError
from .groebner import DEFAULT_MAX_BASIS, DEFAULT_MAX_DEGREE, IdealHandle
from .hilbert import dimension, hilbert_polynomial
from .monomials import standard_pairs
from .orders import order_from_name

FLOAT_SAFE = 2 ** 53


def json_int(v):
    return str(v) if abs(v) > FLOAT_SAFE else v


def _poly_str(g):
    return repr(g).replace(" ", "")


def execute_script(script, order_name=None, collect_timings=False, parallel=1):
    """Run every task of a session script; returns the stable result dict.

    With parallel > 1 independent tasks run on a thread pool; results are
    assembled in task order either way.
    """
    opts = dict(script.options)
    if order_name:
        opts["order"] = order_name
    order = order_from_name(opts.get("order", "degrevlex"))
    max_degree = int(opts.get("max_degree", DEFAULT_MAX_DEGREE))
    max_basis = int(opts.get("max_basis", DEFAULT_MAX_BASIS))

    handles = {}
    for name in script.ideal_order:
        handles[name] = IdealHandle(script.ring, script.ideals[name],
                                    max_basis=max_basis, max_degree=max_degree)

    def run_one(indexed):
        index, task = indexed
        started = time.monotonic()
        payload = _run_task(task[0], task[1:], handles, script, order)
        return index, task, payload, time.monotonic() - started

    jobs = list(enumerate(script.tasks))
    if parallel > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=parallel) as pool:
            finished = list(pool.map(run_one, jobs))
    else:
        finished = [run_one(j) for j in jobs]

    results = []
    timings = {}
    for index, task, payload, elapsed in sorted(finished, key=lambda t: t[0]):
        results.append({"task": " ".join(task), "index": index, "result": payload})
        if collect_timings:
            timings["%d:%s" % (index, " ".join(task))] = round(elapsed, 6)
    return {
        "ring": repr(script.ring),
        "tasks": [" ".join(t) for t in script.tasks],
        "results": results,
        "timings": timings,
        "provenance": {
            "order": opts.get("order", "degrevlex"),
            "max_degree": max_degree,
            "max_basis": max_basis,
        },
    }


def _meta_for(script, name):
    return {flag: True for flag in script.metas.get(name, ())}


def _run_task(kind, names, handles, script, order):
    if kind == "gb":
        I = handles[names[0]]
        basis = I.groebner_basis(order)
        return {"basis": [_poly_str(g) for g in basis]}
    if kind == "hilbert":
        I = handles[names[0]]
        poly, cert = hilbert_polynomial(I, bigraded=False)
        return {
            "dimension": dimension(I),
            "binomial_coefficients": [json_int(c) for c in poly.coeffs],
            "threshold": cert.thresholds[0],
            "window": cert.window,
        }
    if kind == "stdpairs":
        I = handles[names[0]]
        ring = script.ring
        pairs = standard_pairs(I)
        out = []
        for p in pairs:
            mono = ring.monomial(p.monomial)
            out.append({
                "monomial": _poly_str(mono),
                "variables": [ring.names[i] for i in p.variables],
            })
        return {"pairs": out}
    if kind == "adeg":
        I = handles[names[0]]
        table, provenance = _adeg_of_ring_quotient(I, _meta_for(script, names[0]))
        values = {str(i): json_int(v) for i, v in sorted(table.items()) if v}
        return {"adeg": values, "provenance": provenance}
    if kind == "gg":
        J, I = handles[names[0]], handles[names[1]]
        gg = cached_gg(J, I)
        grid = {}
        for i in range(4):
            for j in range(4):
                grid["%d,%d" % (i, j)] = json_int(gg.hilbert(i, j))
        return {
            "ring": repr(gg.ring),
            "generators": [_poly_str(g) for g in gg.ideal.gens],
            "hilbert": grid,
        }
    if kind == "gmult":
        J, I = handles[names[0]], handles[names[1]]
        rep = gmult_report(J, I)
        return {"gmult": {str(i): [json_int(c) for c in v.components]
                          for i, v in sorted(rep.table().items())}}
    if kind == "ladeg":
        J, I = handles[names[0]], handles[names[1]]
        meta = _meta_for(script, names[0])
        d = max(dimension(J), 0)
        out = {}
        for i in range(d + 1):
            vec = ladeg(J, I, i, meta=meta)
            out[str(i)] = [json_int(c) for c in vec.components]
        return {"ladeg": out}
    if kind == "verify":
        J, I = handles[names[0]], handles[names[1]]
        meta = _meta_for(script, names[0])
        record = verify(J, I, meta=meta,
                        label="%s,%s" % (names[0], names[1]))
        data = record.as_dict()
        for key in ("theorem_lhs", "theorem_rhs", "corollary1_gr", "corollary1_a"):
            data[key] = {k: json_int(v) for k, v in data[key].items()}
        return data
    raise AlgebraError("unknown task kind %r" % kind)
