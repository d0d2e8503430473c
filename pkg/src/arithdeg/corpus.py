"""The bundled verification corpus: ~40 desk-scale (J, I) pairs.

Families:
  * the worked examples wired through the test suite, with expected values
    and their provenance;
  * embedded-component families (x^a, x^b*y);
  * the plane-curve family y^2 - x^(2k+1) (prime, equality cases);
  * seeded random monomial ideals in up to 4 variables;
  * non-maximal equigenerated blowup ideals.

Every entry certifies that all associated primes pass through the origin
(monomial ideals and the curve germs do), so graded and local
multiplicities agree.
"""

import random

from .session import parse_session


class CorpusEntry:
    def __init__(self, identifier, script_text, expected=(), notes=""):
        self.identifier = identifier
        self.script_text = script_text
        self.expected = list(expected)    # dicts: task, path, value, provenance
        self.notes = notes

    def script(self):
        return parse_session(self.script_text)

    def __repr__(self):
        return "CorpusEntry(%s)" % self.identifier


def _expected(task, path, value, provenance):
    return {"task": task, "path": list(path), "value": value,
            "provenance": provenance}


def _worked_examples():
    entries = []
    entries.append(CorpusEntry(
        "wx-kx-x2",
        "ring S = Q[x];\n"
        "ideal J = 0;\n"
        "ideal I = x^2;\n"
        "meta J origin_certified;\n"
        "task gmult J I;\n"
        "task verify J I;\n",
        expected=[
            _expected("gmult J I", ["gmult", "1"], [2, 0],
                      "worked example: GG = k[x,q]/(x^2), multiplicity (2,0)"),
            _expected("verify J I", ["theorem_lhs", "1"], 2,
                      "standard pairs of (x^2) in two variables"),
            _expected("verify J I", ["corollary1_a", "1"], 1,
                      "free module of rank one over k[x]"),
            _expected("verify J I", ["corollary1_gr", "1"], 2,
                      "strict corollary case: 2 >= 1"),
        ],
        notes="strict inequality case"))
    entries.append(CorpusEntry(
        "wx-cusp3",
        "ring S = Q[x,y];\n"
        "ideal J = y^2 - x^3;\n"
        "ideal M = x, y;\n"
        "meta J prime;\n"
        "meta J origin_certified;\n"
        "task verify J M;\n",
        expected=[
            _expected("verify J M", ["theorem_lhs", "1"], 2,
                      "tangent cone (y^2) has degree 2"),
            _expected("verify J M", ["corollary1_a", "1"], 2,
                      "Samuel multiplicity of the cusp is 2"),
            _expected("verify J M", ["corollary1_gr", "1"], 2,
                      "equality case"),
        ],
        notes="equality case"))
    entries.append(CorpusEntry(
        "wx-x2xy-m",
        "ring S = Q[x,y];\n"
        "ideal J = x^2, x*y;\n"
        "ideal M = x, y;\n"
        "task stdpairs J;\n"
        "task adeg J;\n"
        "task ladeg J M;\n"
        "task verify J M;\n",
        expected=[
            _expected("adeg J", ["adeg", "1"], 1, "standard pairs: (1,{y})"),
            _expected("adeg J", ["adeg", "0"], 1, "standard pairs: (x,{})"),
            _expected("ladeg J M", ["ladeg", "0"], [1],
                      "length-one zero-dimensional part (x)/(x^2,xy)"),
            _expected("verify J M", ["passed"], True, "already graded: equality"),
        ],
        notes="embedded dim-0 prime on both sides"))
    entries.append(CorpusEntry(
        "wx-xy-m",
        "ring S = Q[x,y];\n"
        "ideal J = x*y;\n"
        "ideal M = x, y;\n"
        "task adeg J;\n"
        "task verify J M;\n",
        expected=[
            _expected("adeg J", ["adeg", "1"], 2,
                      "standard pairs (1,{x}) and (1,{y})"),
        ]))
    entries.append(CorpusEntry(
        "wx-blowup-x2xy",
        "ring S = Q[x,y];\n"
        "ideal J = 0;\n"
        "ideal I = x^2, x*y;\n"
        "task verify J I;\n",
        notes="equigenerated non-primary blowup ideal"))
    entries.append(CorpusEntry(
        "wx-m2",
        "ring S = Q[x,y];\n"
        "ideal J = 0;\n"
        "ideal I = x^2, x*y, y^2;\n"
        "task gmult J I;\n"
        "task verify J I;\n",
        expected=[
            _expected("gmult J I", ["gmult", "2"], [4, 0, 0],
                      "m-primary degeneration: e(m^2) = 4 in component zero"),
        ],
        notes="Samuel degeneration for an m-primary ideal"))
    entries.append(CorpusEntry(
        "wx-parabola",
        "ring S = Q[x,y];\n"
        "ideal J = y - x^2;\n"
        "ideal M = x, y;\n"
        "meta J prime;\n"
        "meta J origin_certified;\n"
        "task verify J M;\n",
        expected=[
            _expected("verify J M", ["corollary1_a", "1"], 1,
                      "smooth point: multiplicity 1"),
        ],
        notes="smooth-curve contrast to the cusp family"))
    return entries


def _embedded_families():
    entries = []
    for a, b in ((3, 1), (3, 2), (4, 2), (4, 3), (2, 1)):
        if (a, b) == (2, 1):
            continue  # wx-x2xy-m already covers it
        entries.append(CorpusEntry(
            "emb-x%d-x%dy" % (a, b),
            "ring S = Q[x,y];\n"
            "ideal J = x^%d, x^%d*y;\n"
            "ideal M = x, y;\n"
            "task adeg J;\n"
            "task verify J M;\n" % (a, b)))
    entries.append(CorpusEntry(
        "emb-3var",
        "ring S = Q[x,y,z];\n"
        "ideal J = x*y, y^2*z;\n"
        "ideal M = x, y, z;\n"
        "task verify J M;\n"))
    entries.append(CorpusEntry(
        "emb-x2xy-blowup-I",
        "ring S = Q[x,y];\n"
        "ideal J = x^2, x*y;\n"
        "ideal I = x^2, x*y, y^2;\n"
        "task verify J I;\n",
        notes="embedded component against an m-primary non-maximal I"))
    return entries


def _curve_family():
    entries = []
    for k in (1, 2, 3):
        entries.append(CorpusEntry(
            "cusp-%d" % (2 * k + 1),
            "ring S = Q[x,y];\n"
            "ideal J = y^2 - x^%d;\n"
            "ideal M = x, y;\n"
            "meta J prime;\n"
            "meta J origin_certified;\n"
            "task verify J M;\n" % (2 * k + 1),
            expected=[
                _expected("verify J M", ["corollary1_a", "1"], 2,
                          "Samuel multiplicity 2 for y^2 = x^(2k+1)"),
                _expected("verify J M", ["corollary1_gr", "1"], 2,
                          "tangent cone (y^2)"),
            ] if k == 1 else []))
    return entries


def _random_monomial_entries():
    rng = random.Random(20240711)
    entries = []
    made = set()
    count = 0
    attempts = 0
    while count < 20 and attempts < 500:
        attempts += 1
        n = rng.choice((2, 3, 3, 4))
        names = ["x", "y", "z", "w"][:n]
        k = rng.randint(2, 4)
        monos = set()
        for _ in range(k):
            d = rng.randint(1, 4)
            exps = [0] * n
            for _ in range(d):
                exps[rng.randrange(n)] += 1
            monos.add(tuple(exps))
        monos = tuple(sorted(monos))
        if not monos or monos in made:
            continue
        made.add(monos)
        count += 1
        gens = []
        for m in monos:
            parts = []
            for nm, e in zip(names, m):
                if e == 1:
                    parts.append(nm)
                elif e > 1:
                    parts.append("%s^%d" % (nm, e))
            gens.append("*".join(parts))
        entries.append(CorpusEntry(
            "rnd-%02d" % count,
            "ring S = Q[%s];\n"
            "ideal J = %s;\n"
            "ideal M = %s;\n"
            "task verify J M;\n"
            % (",".join(names), ", ".join(gens), ", ".join(names))))
    return entries


def _equigenerated_entries():
    entries = []
    entries.append(CorpusEntry(
        "eqg-xy-m2",
        "ring S = Q[x,y];\n"
        "ideal J = x*y;\n"
        "ideal I = x^2, x*y, y^2;\n"
        "task verify J I;\n"))
    entries.append(CorpusEntry(
        "eqg-x2-x2xy",
        "ring S = Q[x,y];\n"
        "ideal J = x^2;\n"
        "ideal I = x^2, x*y;\n"
        "task verify J I;\n"))
    entries.append(CorpusEntry(
        "eqg-principal",
        "ring S = Q[x,y];\n"
        "ideal J = 0;\n"
        "ideal I = x^2;\n"
        "task verify J I;\n"))
    entries.append(CorpusEntry(
        "eqg-3var-m2",
        "ring S = Q[x,y,z];\n"
        "ideal J = x*y;\n"
        "ideal I = x^2, x*y, y^2, x*z, y*z, z^2;\n"
        "task verify J I;\n"))
    return entries


def build_corpus():
    """All corpus entries in their canonical order."""
    entries = []
    entries.extend(_worked_examples())
    entries.extend(_embedded_families())
    entries.extend(_curve_family())
    entries.extend(_equigenerated_entries())
    entries.extend(_random_monomial_entries())
    return entries


def lookup(identifier):
    for e in build_corpus():
        if e.identifier == identifier:
            return e
    raise KeyError(identifier)
