"""Polynomial rings with graded or bigraded variables, and exact polynomials.

Monomials are plain exponent tuples (dense, at most 12 variables); the
helpers below implement the semigroup operations on them.  A Polynomial is
an immutable map from exponent tuple to nonzero field element over a fixed
RingDescriptor.
"""

import re

from .errors import (AlgebraError, NotBigradedError, RingMismatchError,
                     ZeroPolynomialError)
from .fields import QQ

MAX_VARIABLES = 12


# ---------------------------------------------------------------------------
# monomial helpers

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))

def mono_divides(a, b):
    """True when a | b componentwise."""
    return all(x <= y for x, y in zip(a, b))

def mono_div(a, b):
    """a / b, or None when b does not divide a."""
    q = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in q):
        return None
    return q

def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))

def mono_gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))

def mono_degree(m, weights=None):
    if weights is None:
        return sum(m)
    return sum(w * e for w, e in zip(weights, m))


class RingDescriptor:
    """Named variables plus a grading tag and a coefficient field.

    The grading is either a weight per variable (graded case, weights
    default to 1) or a bidegree tag (1,0)/(0,1) per variable (bigraded
    case, partitioning the variables into an x-block and a y-block).
    """

    __slots__ = ("names", "field", "weights", "bidegrees",
                 "x_block", "y_block")

    def __init__(self, names, field=QQ, weights=None, bidegrees=None):
        names = tuple(names)
        if not names:
            raise AlgebraError("a ring needs at least one variable")
        if len(names) > MAX_VARIABLES:
            raise AlgebraError("at most %d variables supported, got %d"
                               % (MAX_VARIABLES, len(names)))
        if len(set(names)) != len(names):
            raise AlgebraError("duplicate variable names: %r" % (names,))
        for n in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", n):
                raise AlgebraError("bad variable name %r" % (n,))
        self.names = names
        self.field = field
        if bidegrees is not None:
            bidegrees = tuple(tuple(b) for b in bidegrees)
            if len(bidegrees) != len(names):
                raise AlgebraError("one bidegree tag per variable required")
            if any(b not in ((1, 0), (0, 1)) for b in bidegrees):
                raise AlgebraError("bidegree tags must be (1,0) or (0,1)")
            self.bidegrees = bidegrees
            self.x_block = tuple(i for i, b in enumerate(bidegrees) if b == (1, 0))
            self.y_block = tuple(i for i, b in enumerate(bidegrees) if b == (0, 1))
            if not self.x_block or not self.y_block:
                raise AlgebraError("bigraded ring needs both an x-block and a y-block")
            self.weights = tuple(1 for _ in names)
        else:
            if weights is None:
                weights = tuple(1 for _ in names)
            else:
                weights = tuple(int(w) for w in weights)
                if len(weights) != len(names) or any(w <= 0 for w in weights):
                    raise AlgebraError("weights must be positive, one per variable")
            self.weights = weights
            self.bidegrees = None
            self.x_block = None
            self.y_block = None

    @classmethod
    def graded(cls, names, field=QQ, weights=None):
        if isinstance(names, str):
            names = [n.strip() for n in names.split(",") if n.strip()]
        return cls(names, field=field, weights=weights)

    @classmethod
    def bigraded(cls, x_names, y_names, field=QQ):
        if isinstance(x_names, str):
            x_names = [n.strip() for n in x_names.split(",") if n.strip()]
        if isinstance(y_names, str):
            y_names = [n.strip() for n in y_names.split(",") if n.strip()]
        names = tuple(x_names) + tuple(y_names)
        tags = [(1, 0)] * len(x_names) + [(0, 1)] * len(y_names)
        return cls(names, field=field, bidegrees=tags)

    @property
    def nvars(self):
        return len(self.names)

    @property
    def is_bigraded(self):
        return self.bidegrees is not None

    def degree(self, m):
        """Weighted total degree of an exponent tuple."""
        return mono_degree(m, self.weights)

    def bidegree(self, m):
        if not self.is_bigraded:
            raise NotBigradedError("ring %r carries no bidegree tags" % (self,))
        i = sum(m[k] for k in self.x_block)
        j = sum(m[k] for k in self.y_block)
        return (i, j)

    def zero_mono(self):
        return (0,) * self.nvars

    def var_index(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise AlgebraError("no variable %r in ring %r" % (name, self)) from None

    def gen(self, i):
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return Polynomial(self, {self.zero_mono(): self.field.one})

    def constant(self, c):
        c = self.field.coerce(c)
        if not c:
            return self.zero()
        return Polynomial(self, {self.zero_mono(): c})

    def monomial(self, exps, coeff=1):
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise AlgebraError("bad exponent vector %r" % (exps,))
        c = self.field.coerce(coeff)
        if not c:
            return self.zero()
        return Polynomial(self, {exps: c})

    def signature(self):
        return (self.names, repr(self.field), self.weights, self.bidegrees)

    def __eq__(self, other):
        return isinstance(other, RingDescriptor) and self.signature() == other.signature()

    def __hash__(self):
        return hash(self.signature())

    def __repr__(self):
        if self.is_bigraded:
            xs = ",".join(self.names[i] for i in self.x_block)
            ys = ",".join(self.names[i] for i in self.y_block)
            return "%s[%s;%s]" % (self.field, xs, ys)
        if all(w == 1 for w in self.weights):
            return "%s[%s]" % (self.field, ",".join(self.names))
        pairs = ",".join("%s:%d" % (n, w) for n, w in zip(self.names, self.weights))
        return "%s[%s]" % (self.field, pairs)


class Polynomial:
    """Exact multivariate polynomial: map from exponent tuple to coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms, _clean=True):
        self.ring = ring
        if _clean:
            clean = {}
            for m, c in terms.items():
                c = ring.field.coerce(c)
                if c:
                    clean[m] = c
            self.terms = clean
        else:
            self.terms = terms

    # -- predicates -------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_monomial(self):
        return len(self.terms) == 1

    def is_constant(self):
        return not self.terms or set(self.terms) == {self.ring.zero_mono()}

    def is_homogeneous(self):
        degs = {self.ring.degree(m) for m in self.terms}
        return len(degs) <= 1

    def is_bihomogeneous(self):
        degs = {self.ring.bidegree(m) for m in self.terms}
        return len(degs) <= 1

    # -- arithmetic -------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError("operands over %r and %r" % (self.ring, other.ring))

    def __add__(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            terms = dict(self.terms)
            for m, c in other.terms.items():
                s = terms.get(m, 0) + c
                if s:
                    terms[m] = s
                elif m in terms:
                    del terms[m]
            return Polynomial(self.ring, terms, _clean=False)
        return self + self.ring.constant(other)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()}, _clean=False)

    def __sub__(self, other):
        if isinstance(other, Polynomial):
            return self + (-other)
        return self + self.ring.constant(-self.ring.field.coerce(other))

    def __rsub__(self, other):
        return (-self) + self.ring.constant(other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            terms = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = mono_mul(m1, m2)
                    s = terms.get(m, 0) + c1 * c2
                    if s:
                        terms[m] = s
                    elif m in terms:
                        del terms[m]
            return Polynomial(self.ring, terms, _clean=False)
        c = self.ring.field.coerce(other)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()}, _clean=False)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise AlgebraError("negative polynomial power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int):
            return self == self.ring.constant(other)
        return NotImplemented

    __hash__ = None

    # -- structure --------------------------------------------------------

    def leading_term(self, order):
        """The order-maximal (monomial, coefficient) pair; errors on zero."""
        if not self.terms:
            raise ZeroPolynomialError("leading term of the zero polynomial")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def leading_monomial(self, order):
        return self.leading_term(order)[0]

    def degree(self):
        """Weighted total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(self.ring.degree(m) for m in self.terms)

    def block_degree_range(self, block):
        degs = [sum(m[i] for i in block) for m in self.terms]
        return min(degs), max(degs)

    def initial_block_form(self, block):
        """Sum of terms of minimal total exponent over the given variable block."""
        if not self.terms:
            raise ZeroPolynomialError("initial form of the zero polynomial")
        block = tuple(block)
        low = min(sum(m[i] for i in block) for m in self.terms)
        kept = {m: c for m, c in self.terms.items() if sum(m[i] for i in block) == low}
        return Polynomial(self.ring, kept, _clean=False)

    def coefficient(self, m):
        return self.terms.get(tuple(m), self.ring.field.zero)

    def monomials(self):
        return sorted(self.terms)

    def monic(self, order):
        _, c = self.leading_term(order)
        if c == self.ring.field.one:
            return self
        return self * (self.ring.field.one / c)

    def substitute(self, target_ring, images):
        """Evaluate under variable -> polynomial-in-target-ring assignments."""
        if len(images) != self.ring.nvars:
            raise AlgebraError("need one image per variable")
        result = target_ring.zero()
        for m, c in self.terms.items():
            term = target_ring.constant(c)
            for i, e in enumerate(m):
                if e:
                    term = term * images[i] ** e
            result = result + term
        return result

    # -- display ----------------------------------------------------------

    def _mono_str(self, m):
        parts = []
        for name, e in zip(self.ring.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append("%s^%d" % (name, e))
        return "*".join(parts)

    def __repr__(self):
        if not self.terms:
            return "0"
        order_key = lambda m: (-sum(m), m)
        chunks = []
        for m in sorted(self.terms, key=order_key):
            c = self.terms[m]
            ms = self._mono_str(m)
            cs = str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if ms and cs == "1":
                body = ms
            elif ms:
                body = "%s*%s" % (cs, ms)
            else:
                body = cs
            if not chunks:
                chunks.append("-" + body if neg else body)
            else:
                chunks.append(("- " if neg else "+ ") + body)
        return " ".join(chunks)


# ---------------------------------------------------------------------------
# small expression parser (shared by tests, the corpus, and session scripts)

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
                    r"|(?P<op>[-+*^()/]))")


def parse_polynomial(ring, text):
    """Parse '+', '-', '*', '^', parentheses, integers and a/b rationals."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise AlgebraError("cannot tokenize %r at offset %d" % (text, pos))
            break
        if m.group("num") is not None:
            tokens.append(("num", int(m.group("num"))))
        elif m.group("name") is not None:
            tokens.append(("name", m.group("name")))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    tokens.append(("end", None))

    state = {"i": 0}

    def peek():
        return tokens[state["i"]]

    def advance():
        tok = tokens[state["i"]]
        state["i"] += 1
        return tok

    def parse_atom():
        kind, val = peek()
        if kind == "num":
            advance()
            if peek() == ("op", "/"):
                advance()
                k2, v2 = advance()
                if k2 != "num":
                    raise AlgebraError("expected integer denominator in %r" % text)
                return ring.constant(ring.field.coerce(val) / ring.field.coerce(v2))
            return ring.constant(val)
        if kind == "name":
            advance()
            return ring.gen(ring.var_index(val))
        if (kind, val) == ("op", "("):
            advance()
            inner = parse_sum()
            if advance() != ("op", ")"):
                raise AlgebraError("unbalanced parentheses in %r" % text)
            return inner
        raise AlgebraError("unexpected token %r in %r" % (val, text))

    def parse_power():
        base = parse_atom()
        while peek() == ("op", "^"):
            advance()
            kind, val = advance()
            if kind != "num":
                raise AlgebraError("exponent must be an integer in %r" % text)
            base = base ** val
        return base

    def parse_product():
        acc = parse_power()
        while True:
            kind, val = peek()
            if (kind, val) == ("op", "*"):
                advance()
                acc = acc * parse_power()
            elif kind in ("num", "name") or (kind, val) == ("op", "("):
                # implicit multiplication: 2x, x y
                acc = acc * parse_power()
            else:
                return acc

    def parse_sum():
        kind, val = peek()
        negate = False
        if (kind, val) == ("op", "-"):
            advance()
            negate = True
        elif (kind, val) == ("op", "+"):
            advance()
        acc = parse_product()
        if negate:
            acc = -acc
        while peek()[0] == "op" and peek()[1] in "+-":
            _, op = advance()
            term = parse_product()
            acc = acc + term if op == "+" else acc - term
        return acc

    result = parse_sum()
    if peek()[0] != "end":
        raise AlgebraError("trailing input in %r" % text)
    return result
