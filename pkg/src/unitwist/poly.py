"""Exact multivariate polynomials over Q and tensor-power elements.

A `PolyRing` fixes an ordered list of generator variables followed by an
optional list of parameter variables.  Parameters are ordinary commuting
central variables, but they are excluded from the notion of *degree* used
for all truncation decisions and they sort below every generator in the
term order.  Coefficients are `fractions.Fraction`; no floating point
arithmetic occurs anywhere.

The canonical text rendering (used for golden comparisons) lists terms in
decreasing graded-lex order, e.g. ``W*X + 1/2*Y``; `parse_poly` reads the
same format back.
"""

from __future__ import annotations

import re
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class RingContextError(ValueError):
    """Raised when values from different ring contexts are combined."""


class PolyRing:
    """An ordered polynomial ring Q[X1,...,Xn; params]."""

    def __init__(self, generators, parameters=()):
        generators = tuple(generators)
        parameters = tuple(parameters)
        names = generators + parameters
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names: %r" % (names,))
        self.generators = generators
        self.parameters = parameters
        self.names = names
        self.ngens = len(generators)
        self.index = {name: i for i, name in enumerate(names)}
        self._zero_exps = (0,) * len(names)
        self.one_monomial = Monomial(self, self._zero_exps)
        self.zero = Poly(self, {})
        self.one = Poly(self, {self.one_monomial: ONE})

    def is_parameter(self, name):
        return name in self.parameters

    def monomial(self, exps):
        return Monomial(self, tuple(exps))

    def var(self, name):
        i = self.index[name]
        exps = [0] * len(self.names)
        exps[i] = 1
        return Poly(self, {Monomial(self, tuple(exps)): ONE})

    def const(self, c):
        c = Fraction(c)
        if c == 0:
            return self.zero
        return Poly(self, {self.one_monomial: c})

    def gens(self):
        return [self.var(n) for n in self.generators]

    def monomials_up_to(self, bound, include_one=True, names=None):
        """All monomials in the given variables with generator-degree <= bound.

        Deterministic: listed in increasing graded-lex order.
        """
        if names is None:
            names = self.generators
        idxs = [self.index[n] for n in names]
        out = []

        def rec(pos, budget, exps):
            if pos == len(idxs):
                out.append(Monomial(self, tuple(exps)))
                return
            for e in range(budget + 1):
                exps[idxs[pos]] = e
                rec(pos + 1, budget - e, exps)
            exps[idxs[pos]] = 0

        rec(0, bound, [0] * len(self.names))
        if not include_one:
            out = [m for m in out if m.total_degree() > 0]
        out.sort(key=grlex_key)
        return out

    def extended(self, extra_generators=(), extra_parameters=()):
        return PolyRing(self.generators + tuple(extra_generators),
                        self.parameters + tuple(extra_parameters))

    def __repr__(self):
        if self.parameters:
            return "PolyRing(%s; %s)" % (",".join(self.generators), ",".join(self.parameters))
        return "PolyRing(%s)" % ",".join(self.generators)


class Monomial:
    """A power product, stored densely over the ring's variable list."""

    __slots__ = ("ring", "exps", "_hash")

    def __init__(self, ring, exps):
        self.ring = ring
        self.exps = exps
        self._hash = hash(exps)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return self.exps == other.exps and self.ring is other.ring

    def degree(self):
        """Generator degree; parameters count 0."""
        return sum(self.exps[: self.ring.ngens])

    def param_degree(self):
        return sum(self.exps[self.ring.ngens:])

    def total_degree(self):
        return sum(self.exps)

    def mul(self, other):
        return Monomial(self.ring, tuple(a + b for a, b in zip(self.exps, other.exps)))

    def divides(self, other):
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def divide(self, other):
        """self / other, assuming other divides self."""
        return Monomial(self.ring, tuple(a - b for a, b in zip(self.exps, other.exps)))

    def lcm(self, other):
        return Monomial(self.ring, tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def gcd(self, other):
        return Monomial(self.ring, tuple(min(a, b) for a, b in zip(self.exps, other.exps)))

    def coprime(self, other):
        return all(a == 0 or b == 0 for a, b in zip(self.exps, other.exps))

    def variables(self):
        return [self.ring.names[i] for i, e in enumerate(self.exps) if e > 0]

    def split_params(self):
        """Split into (generator part, parameter part)."""
        ng = self.ring.ngens
        gen = self.exps[:ng] + (0,) * (len(self.exps) - ng)
        par = (0,) * ng + self.exps[ng:]
        return Monomial(self.ring, gen), Monomial(self.ring, par)

    def max_generator_index(self):
        """Largest 1-based generator index occurring, 0 if none."""
        best = 0
        for i in range(self.ring.ngens):
            if self.exps[i] > 0:
                best = i + 1
        return best

    def as_poly(self):
        return Poly(self.ring, {self: ONE})

    def is_one(self):
        return not any(self.exps)

    def __repr__(self):
        return render_monomial(self) or "1"


def grlex_key(m):
    """Sort key for graded lex with X1 < X2 < ... < Xn, parameters lowest.

    Compares generator degree first, then generator exponents from the top
    variable down, then the same for parameters.  Ascending comparison of
    keys realizes the order; it is a product order (generators dominate).
    """
    ng = m.ring.ngens
    g = m.exps[:ng]
    p = m.exps[ng:]
    return (sum(g), tuple(reversed(g)), sum(p), tuple(reversed(p)))


class Poly:
    """Immutable sparse polynomial: mapping monomial -> nonzero Fraction."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c != 0}

    # -- ring sanity ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring is not self.ring:
                raise RingContextError("polynomials from different rings")
            return other
        return self.ring.const(other)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = terms.get(m, ZERO) + c
            if v == 0:
                terms.pop(m, None)
            else:
                terms[m] = v
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return self.ring.zero
            return Poly(self.ring, {m: v * c for m, v in self.terms.items()})
        other = self._coerce(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1.mul(m2)
                v = terms.get(m, ZERO) + c1 * c2
                if v == 0:
                    terms.pop(m, None)
                else:
                    terms[m] = v
        return Poly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        return isinstance(other, Poly) and self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.ring), frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    # -- inspection -------------------------------------------------------
    def degree(self):
        """Generator degree (parameters count 0); -1 for the zero poly."""
        if not self.terms:
            return -1
        return max(m.degree() for m in self.terms)

    def constant_term(self):
        """Coefficient part of generator-degree 0 (may involve parameters)."""
        out = {}
        for m, c in self.terms.items():
            if m.degree() == 0:
                out[m] = c
        return Poly(self.ring, out)

    def counit(self):
        """The coefficient of the monomial 1 (evaluation at the identity)."""
        return self.terms.get(self.ring.one_monomial, ZERO)

    def coefficient(self, monomial):
        return self.terms.get(monomial, ZERO)

    def coefficient_of_var(self, name):
        """Coefficient of the plain degree-1 monomial in `name`."""
        exps = [0] * len(self.ring.names)
        exps[self.ring.index[name]] = 1
        return self.terms.get(Monomial(self.ring, tuple(exps)), ZERO)

    def sorted_terms(self, key=grlex_key, reverse=True):
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=reverse)

    def variables(self):
        seen = set()
        for m in self.terms:
            seen.update(m.variables())
        return sorted(seen, key=lambda n: self.ring.index[n])

    def max_generator_index(self):
        """Largest 1-based generator index occurring, 0 if none."""
        best = 0
        for m in self.terms:
            for i in range(self.ring.ngens):
                if m.exps[i] > 0:
                    best = max(best, i + 1)
        return best

    # -- substitution -----------------------------------------------------
    def substitute(self, images, target):
        """Algebra map sending variables per `images` (name -> Poly in target).

        Variables absent from `images` must exist in the target ring and map
        to themselves.
        """
        cache = {}

        def image_of(i):
            if i not in cache:
                name = self.ring.names[i]
                if name in images:
                    img = images[name]
                    if not isinstance(img, Poly):
                        img = target.const(img)
                    cache[i] = img
                else:
                    cache[i] = target.var(name)
            return cache[i]

        result = target.zero
        for m, c in self.terms.items():
            term = target.const(c)
            for i, e in enumerate(m.exps):
                if e:
                    term = term * image_of(i) ** e
            result = result + term
        return result

    def __repr__(self):
        return render_poly(self)


# -- canonical text -------------------------------------------------------

def render_monomial(m):
    """Variables by declared name in decreasing order, '*'-joined."""
    parts = []
    for i in range(len(m.ring.names) - 1, -1, -1):
        e = m.exps[i]
        if e == 1:
            parts.append(m.ring.names[i])
        elif e > 1:
            parts.append("%s^%d" % (m.ring.names[i], e))
    return "*".join(parts)


def render_poly(p):
    if not p.terms:
        return "0"
    pieces = []
    for m, c in p.sorted_terms():
        mono = render_monomial(m)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = "%s*%s" % (mag, mono)
        pieces.append(("-" if c < 0 else "+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += " %s %s" % (sign, body)
    return out


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
                    r"|(?P<op>[\^*+\-]))")


def parse_poly(text, ring):
    """Parse the canonical rendering (signed sums of '*'-joined factors)."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise ValueError("cannot tokenize %r at %d" % (text, pos))
        pos = m.end()
        if m.group("num") is not None:
            tokens.append(("num", Fraction(m.group("num"))))
        elif m.group("name") is not None:
            tokens.append(("name", m.group("name")))
        else:
            tokens.append(("op", m.group("op")))

    result = ring.zero
    i = 0
    n = len(tokens)
    if n == 0:
        raise ValueError("empty polynomial text")
    while i < n:
        sign = ONE
        while i < n and tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if i >= n:
            raise ValueError("dangling sign in %r" % text)
        term = ring.const(sign)
        expect_factor = True
        while i < n:
            kind, val = tokens[i]
            if expect_factor:
                if kind == "num":
                    term = term * val
                    i += 1
                elif kind == "name":
                    if val not in ring.index:
                        raise ValueError("unknown variable %r" % val)
                    exp = 1
                    i += 1
                    if i + 1 < n and tokens[i] == ("op", "^") and tokens[i + 1][0] == "num":
                        exp = int(tokens[i + 1][1])
                        i += 2
                    term = term * ring.var(val) ** exp
                else:
                    raise ValueError("expected factor in %r" % text)
                expect_factor = False
            else:
                if kind == "op" and val == "*":
                    expect_factor = True
                    i += 1
                elif kind in ("num", "name"):
                    # juxtaposition means multiplication (file-format leniency)
                    expect_factor = True
                else:
                    break
        result = result + term
    return result


# -- tensor powers --------------------------------------------------------

class TensorPoly:
    """Element of a k-fold tensor power, normalized to monomial slots.

    Stored as a mapping tuple-of-monomials -> Fraction.  All slot
    operations are linear and preserve the normal form, so
    ``normalized(normalized(t)) == normalized(t)`` holds trivially.
    """

    __slots__ = ("ring", "rank", "terms")

    def __init__(self, ring, rank, terms):
        self.ring = ring
        self.rank = rank
        self.terms = {k: c for k, c in terms.items() if c != 0}

    @classmethod
    def zero(cls, ring, rank):
        return cls(ring, rank, {})

    @classmethod
    def from_polys(cls, polys, coeff=ONE):
        """Normalize a pure tensor p1 (x) ... (x) pk by distributing."""
        ring = polys[0].ring
        for p in polys:
            if p.ring is not ring:
                raise RingContextError("tensor slots from different rings")
        terms = {(): Fraction(coeff)}
        for p in polys:
            new = {}
            for key, c in terms.items():
                for m, cm in p.terms.items():
                    k2 = key + (m,)
                    v = new.get(k2, ZERO) + c * cm
                    if v == 0:
                        new.pop(k2, None)
                    else:
                        new[k2] = v
            terms = new
        return cls(ring, len(polys), terms)

    @classmethod
    def from_poly(cls, p):
        return cls.from_polys([p])

    def normalized(self):
        return TensorPoly(self.ring, self.rank, dict(self.terms))

    def __add__(self, other):
        if other.rank != self.rank or other.ring is not self.ring:
            raise RingContextError("tensor rank/ring mismatch")
        terms = dict(self.terms)
        for k, c in other.terms.items():
            v = terms.get(k, ZERO) + c
            if v == 0:
                terms.pop(k, None)
            else:
                terms[k] = v
        return TensorPoly(self.ring, self.rank, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return TensorPoly(self.ring, self.rank, {k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, TensorPoly) and self.ring is other.ring
                and self.rank == other.rank and self.terms == other.terms)

    def is_zero(self):
        return not self.terms

    def tensor(self, other):
        terms = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                terms[k1 + k2] = terms.get(k1 + k2, ZERO) + c1 * c2
        return TensorPoly(self.ring, self.rank + other.rank, terms)

    def slotwise_mul(self, other):
        """Componentwise product (the algebra structure of the tensor power)."""
        if other.rank != self.rank:
            raise RingContextError("tensor rank mismatch")
        terms = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = tuple(a.mul(b) for a, b in zip(k1, k2))
                v = terms.get(key, ZERO) + c1 * c2
                if v == 0:
                    terms.pop(key, None)
                else:
                    terms[key] = v
        return TensorPoly(self.ring, self.rank, terms)

    def apply_linear_slot(self, slot, phi):
        """Contract one slot (1-based) with a linear functional on Poly.

        Returns a TensorPoly of rank k-1, or a Poly when k == 2 contracts
        to rank 1?  No: always a TensorPoly of rank k-1 (rank >= 2 required).
        """
        if self.rank < 2:
            raise ValueError("rank must be >= 2 to contract a slot")
        if not 1 <= slot <= self.rank:
            raise IndexError("slot out of range")
        s = slot - 1
        terms = {}
        for key, c in self.terms.items():
            val = phi(key[s].as_poly())
            if val == 0:
                continue
            k2 = key[:s] + key[s + 1:]
            v = terms.get(k2, ZERO) + c * val
            if v == 0:
                terms.pop(k2, None)
            else:
                terms[k2] = v
        return TensorPoly(self.ring, self.rank - 1, terms)

    def map_slot(self, slot, f):
        """Replace one slot (1-based) through a rank-increasing map.

        `f` maps a monomial to a TensorPoly of some fixed rank r; the result
        has rank k - 1 + r.  Used to apply a coproduct to one slot.
        """
        s = slot - 1
        out_terms = {}
        out_rank = None
        for key, c in self.terms.items():
            img = f(key[s])
            if out_rank is None:
                out_rank = self.rank - 1 + img.rank
            for ikey, ic in img.terms.items():
                k2 = key[:s] + ikey + key[s + 1:]
                v = out_terms.get(k2, ZERO) + c * ic
                if v == 0:
                    out_terms.pop(k2, None)
                else:
                    out_terms[k2] = v
        if out_rank is None:
            raise ValueError("cannot map a slot of the zero tensor")
        return TensorPoly(self.ring, out_rank, out_terms)

    def slot_poly(self, key_index):
        raise NotImplementedError

    def to_poly(self):
        if self.rank != 1:
            raise ValueError("rank-1 tensor expected")
        return Poly(self.ring, {k[0]: c for k, c in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda t: tuple(grlex_key(m) for m in t[0]), reverse=True)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for key, c in self.sorted_terms():
            slots = " (x) ".join(render_monomial(m) or "1" for m in key)
            parts.append("%s [%s]" % (c, slots))
        return " + ".join(parts)


def poly_mul(f, g):
    """Exact product. Provided as a named operation alongside ``*``."""
    return f * g


def apply_functional_slot(t, slot, phi):
    """Contract slot `slot` (1-based) of `t` with the linear functional `phi`."""
    return t.apply_linear_slot(slot, phi)
