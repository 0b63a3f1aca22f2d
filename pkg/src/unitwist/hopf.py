"""Hopf-algebraic presentation of a unipotent group.

A group of dimension n is given by ordered generators X1 < ... < Xn for
its coordinate ring together with the coproduct corrections

    Delta(Xi) = Xi (x) 1 + 1 (x) Xi + q(Xi),

where q(Xi) is a rank-2 tensor with zero counit in each slot involving
only X1..X_{i-1}.  Everything else (iterated coproducts, the antipode,
the group law on points, Lie structure constants, coset-function spaces)
is computed from that single piece of data.

All operations are pure; the per-presentation caches only memoize values
that are uniquely determined, so results are identical with or without
caching.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .poly import (ONE, ZERO, Monomial, Poly, PolyRing, TensorPoly,
                   grlex_key, render_poly)


class PresentationError(ValueError):
    pass


class Point:
    """A group element: rational (or parameter-valued) coordinates."""

    def __init__(self, group, coords):
        self.group = group
        ring = group.ring
        table = {}
        for name, value in coords.items():
            if name not in ring.index or ring.is_parameter(name):
                raise ValueError("unknown generator %r" % name)
            if not isinstance(value, Poly):
                value = ring.const(value)
            if value.degree() > 0:
                raise ValueError("point coordinate %r must be generator-free" % name)
            table[name] = value
        self.coords = table

    def coord(self, name):
        return self.coords.get(name, self.group.ring.zero)

    def __repr__(self):
        parts = ["%s=%s" % (n, render_poly(p)) for n, p in sorted(self.coords.items())]
        return "Point(%s)" % ", ".join(parts)


class SubgroupParam:
    """A closed subgroup given by a polynomial parametrization.

    `coord_exprs` maps each generator name to a Poly in fresh parameter
    variables t1..tm (its own small ring); unlisted generators are 0.
    point(0,...,0) must be the identity.
    """

    def __init__(self, group, param_names, coord_exprs):
        self.group = group
        self.param_names = tuple(param_names)
        self.param_ring = PolyRing(self.param_names)
        exprs = {}
        for name in group.ring.generators:
            e = coord_exprs.get(name)
            if e is None:
                exprs[name] = self.param_ring.zero
            elif isinstance(e, Poly):
                if e.ring is not self.param_ring:
                    e = e.substitute({}, self.param_ring)
                exprs[name] = e
            else:
                exprs[name] = self.param_ring.const(e)
        self.coord_exprs = exprs
        for name, e in exprs.items():
            if e.counit() != 0:
                raise ValueError("parametrization of %r does not pass through the identity" % name)

    @property
    def dim(self):
        return len(self.param_names)

    def restrict(self, f, target=None, rename=None):
        """Restriction O(G) -> Q[t1..tm]: substitute the parametrization."""
        target = target or self.param_ring
        images = {}
        for name, e in self.coord_exprs.items():
            img = e
            if target is not self.param_ring:
                ren = rename or {}
                img = e.substitute({t: target.var(ren.get(t, t)) for t in self.param_names}, target)
            images[name] = img
        for p in self.group.ring.parameters:
            if p in target.index:
                images[p] = target.var(p)
        return f.substitute(images, target)

    def tangent_vectors(self):
        """d/dt_j at t=0 of the parametrization, as vectors over the generators."""
        vecs = []
        for t in self.param_names:
            vecs.append([self.coord_exprs[g].coefficient_of_var(t)
                         for g in self.group.ring.generators])
        return vecs


class LieAlgebraData:
    """Structure constants for the Lie algebra dual to the generators."""

    def __init__(self, basis, brackets):
        self.basis = tuple(basis)
        n = len(self.basis)
        table = {}
        for (i, j), vec in brackets.items():
            row = [Fraction(x) for x in vec]
            if len(row) != n:
                raise ValueError("bracket vector has wrong length")
            if any(row):
                table[(i, j)] = row
        self.brackets = table
        self.n = n

    def bracket_basis(self, i, j):
        if i == j:
            return [ZERO] * self.n
        if (i, j) in self.brackets:
            return list(self.brackets[(i, j)])
        if (j, i) in self.brackets:
            return [-c for c in self.brackets[(j, i)]]
        return [ZERO] * self.n

    def bracket(self, v, w):
        out = [ZERO] * self.n
        for i, a in enumerate(v):
            if a == 0:
                continue
            for j, b in enumerate(w):
                if b == 0:
                    continue
                bb = self.bracket_basis(i, j)
                for k in range(self.n):
                    out[k] += a * b * bb[k]
        return out

    def check_jacobi(self):
        n = self.n
        basis = [[ONE if i == k else ZERO for k in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    s = [ZERO] * n
                    for (a, b, c) in ((i, j, k), (k, i, j), (j, k, i)):
                        v = self.bracket(self.bracket(basis[a], basis[b]), basis[c])
                        s = [x + y for x, y in zip(s, v)]
                    if any(s):
                        return False, (i, j, k)
        return True, None

    def check_nilpotent(self):
        """Lower central series reaches 0."""
        n = self.n
        basis = [[ONE if i == k else ZERO for k in range(n)] for i in range(n)]
        layer = basis
        for _ in range(n + 1):
            nxt = [self.bracket(v, w) for v in layer for w in basis]
            nxt = [v for v in nxt if any(v)]
            if not nxt:
                return True
            layer, _ = linalg.rref(nxt)
        return False

    def derived_dim(self, sub_basis=None):
        """dim of the span of all brackets (optionally of a sub-basis)."""
        vecs = sub_basis if sub_basis is not None else \
            [[ONE if i == k else ZERO for k in range(self.n)] for i in range(self.n)]
        brs = []
        for i in range(len(vecs)):
            for j in range(i + 1, len(vecs)):
                b = self.bracket(vecs[i], vecs[j])
                if any(b):
                    brs.append(b)
        return linalg.matrix_rank(brs)


class GroupPresentation:
    """A unipotent group presented by its Hopf data."""

    def __init__(self, name, generators, q_data=None, parameters=()):
        self.name = name
        self.ring = PolyRing(generators, parameters)
        self.q = {}
        q_data = q_data or {}
        for gen, t in q_data.items():
            if gen not in self.ring.index:
                raise PresentationError("q-data for unknown generator %r" % gen)
            if not isinstance(t, TensorPoly) or t.rank != 2:
                raise PresentationError("q(%s) must be a rank-2 tensor" % gen)
            if not t.is_zero():
                self.q[gen] = t
        self.named_subgroups = {}
        self.named_points = {}
        self._coprod = {}
        self._iter = {}
        self._antipode = {}
        self._corad = {}
        self._lie = None

    # -- bookkeeping ------------------------------------------------------
    def set_q(self, gen, tensor):
        """Attach a coproduct correction after construction (clears caches)."""
        if gen not in self.ring.index:
            raise PresentationError("q-data for unknown generator %r" % gen)
        if not isinstance(tensor, TensorPoly) or tensor.rank != 2 or tensor.ring is not self.ring:
            raise PresentationError("q(%s) must be a rank-2 tensor over the group ring" % gen)
        if tensor.is_zero():
            self.q.pop(gen, None)
        else:
            self.q[gen] = tensor
        self._coprod.clear()
        self._iter.clear()
        self._antipode.clear()
        self._corad.clear()
        self._lie = None

    def add_subgroup(self, name, param_names, coord_exprs):
        self.named_subgroups[name] = SubgroupParam(self, param_names, coord_exprs)
        return self.named_subgroups[name]

    def add_point(self, name, coords):
        self.named_points[name] = Point(self, coords)
        return self.named_points[name]

    def point(self, coords):
        return Point(self, coords)

    def identity_point(self):
        return Point(self, {})

    def gen_index(self, name):
        """1-based chain index of a generator."""
        return self.ring.index[name] + 1

    # -- coproduct ---------------------------------------------------------
    def coproduct_gen(self, name):
        one = self.ring.one
        x = self.ring.var(name)
        base = TensorPoly.from_polys([x, one]) + TensorPoly.from_polys([one, x])
        q = self.q.get(name)
        return base + q if q is not None else base

    def coproduct_monomial(self, m):
        cached = self._coprod.get(m)
        if cached is not None:
            return cached
        if m.is_one():
            result = TensorPoly.from_polys([self.ring.one, self.ring.one])
        else:
            for i in range(len(self.ring.names)):
                if m.exps[i] > 0:
                    break
            name = self.ring.names[i]
            exps = list(m.exps)
            exps[i] -= 1
            rest = Monomial(self.ring, tuple(exps))
            if self.ring.is_parameter(name):
                # Parameters are central scalars: Delta is Q[params]-linear.
                # The parameter factor is carried on slot 1 by convention;
                # bilinear consumers split it off as a coefficient.
                pexps = [0] * len(self.ring.names)
                pexps[i] = 1
                pmono = Monomial(self.ring, tuple(pexps))
                part = self.coproduct_monomial(rest)
                result = TensorPoly(self.ring, 2,
                                    {(k[0].mul(pmono), k[1]): c
                                     for k, c in part.terms.items()})
            else:
                result = self.coproduct_monomial(rest).slotwise_mul(self.coproduct_gen(name))
        self._coprod[m] = result
        return result

    def coproduct(self, f):
        out = TensorPoly.zero(self.ring, 2)
        for m, c in f.terms.items():
            out = out + self.coproduct_monomial(m).scale(c)
        return out

    def iterated_coproduct_monomial(self, m, k):
        """Delta^k applied to a monomial, a rank k+1 tensor (k >= 1)."""
        if k == 1:
            return self.coproduct_monomial(m)
        key = (m, k)
        cached = self._iter.get(key)
        if cached is None:
            prev = self.iterated_coproduct_monomial(m, k - 1)
            cached = prev.map_slot(prev.rank, self.coproduct_monomial)
            self._iter[key] = cached
        return cached

    def iterated_coproduct(self, f, k):
        if k < 1:
            raise ValueError("k must be >= 1")
        out = TensorPoly.zero(self.ring, k + 1)
        for m, c in f.terms.items():
            out = out + self.iterated_coproduct_monomial(m, k).scale(c)
        return out

    def counit(self, f):
        return f.counit()

    # -- antipode -----------------------------------------------------------
    def antipode_gen(self, name):
        x = self.ring.var(name)
        s = -x
        q = self.q.get(name)
        if q is not None:
            for (m1, m2), c in q.terms.items():
                s = s - self.antipode_monomial(m1) * m2.as_poly() * c
        return s

    def antipode_monomial(self, m):
        cached = self._antipode.get(m)
        if cached is not None:
            return cached
        if m.is_one():
            result = self.ring.one
        else:
            for i in range(len(self.ring.names)):
                if m.exps[i] > 0:
                    break
            name = self.ring.names[i]
            exps = list(m.exps)
            exps[i] -= 1
            rest = Monomial(self.ring, tuple(exps))
            if self.ring.is_parameter(name):
                result = self.antipode_monomial(rest) * self.ring.var(name)
            else:
                result = self.antipode_monomial(rest) * self.antipode_gen(name)
        self._antipode[m] = result
        return result

    def antipode(self, f):
        out = self.ring.zero
        for m, c in f.terms.items():
            out = out + self.antipode_monomial(m) * c
        return out

    # -- coradical degree ----------------------------------------------------
    def corad_degree_gen(self, name):
        cached = self._corad.get(name)
        if cached is not None:
            return cached
        q = self.q.get(name)
        d = 1
        if q is not None:
            for (m1, m2), _ in q.terms.items():
                d = max(d, self.corad_degree_monomial(m1) + self.corad_degree_monomial(m2))
        self._corad[name] = d
        return d

    def corad_degree_monomial(self, m):
        d = 0
        for i in range(self.ring.ngens):
            if m.exps[i]:
                d += m.exps[i] * self.corad_degree_gen(self.ring.names[i])
        return d

    def corad_degree(self, f):
        if f.is_zero():
            return 0
        return max(self.corad_degree_monomial(m) for m in f.terms)

    # -- word tables (degree-(1,..,1) components of iterated coproducts) -----
    def word_table(self, m, k, _cache={}):
        """Coefficients of X_{i1} (x) ... (x) X_{ik} in Delta^{k-1}(monomial).

        Returns a dict word-tuple (0-based generator indices) -> Fraction.
        """
        key = (id(self), m, k)
        hit = _cache.get(key)
        if hit is not None:
            return hit
        if k == 0:
            out = {(): ONE} if m.is_one() else {}
        elif k == 1:
            out = {}
            if m.degree() == 1 and m.param_degree() == 0:
                for i in range(self.ring.ngens):
                    if m.exps[i] == 1:
                        out[(i,)] = ONE
        else:
            out = {}
            for (m1, m2), c in self.coproduct_monomial(m).terms.items():
                if m1.degree() != 1 or m1.param_degree() != 0:
                    continue
                idx = next(i for i in range(self.ring.ngens) if m1.exps[i] == 1)
                for word, c2 in self.word_table(m2, k - 1).items():
                    w = (idx,) + word
                    v = out.get(w, ZERO) + c * c2
                    if v == 0:
                        out.pop(w, None)
                    else:
                        out[w] = v
        _cache[key] = out
        return out

    # -- points ---------------------------------------------------------------
    def evaluate(self, f, p):
        """Evaluate f at a point; exact, multiplicative."""
        images = {g: p.coord(g) for g in self.ring.generators}
        out = f.substitute(images, self.ring)
        return out

    def evaluate_scalar(self, f, p):
        v = self.evaluate(f, p)
        if v.degree() > 0:
            raise ValueError("evaluation did not produce a scalar")
        return v

    def point_mul(self, p, q):
        coords = {}
        for g in self.ring.generators:
            t = self.coproduct_gen(g)
            acc = self.ring.zero
            for (m1, m2), c in t.terms.items():
                acc = acc + self.evaluate(m1.as_poly(), p) * self.evaluate(m2.as_poly(), q) * c
            coords[g] = acc
        return Point(self, coords)

    def point_inv(self, p):
        coords = {}
        for g in self.ring.generators:
            coords[g] = self.evaluate(self.antipode_gen(g), p)
        return Point(self, coords)

    def winding_left(self, g, f):
        """tau^l_g : f -> sum f1(g) f2."""
        out = self.ring.zero
        for m, c in f.terms.items():
            for (m1, m2), c2 in self.coproduct_monomial(m).terms.items():
                out = out + self.evaluate(m1.as_poly(), g) * m2.as_poly() * (c * c2)
        return out

    def winding_right(self, g, f):
        out = self.ring.zero
        for m, c in f.terms.items():
            for (m1, m2), c2 in self.coproduct_monomial(m).terms.items():
                out = out + m1.as_poly() * self.evaluate(m2.as_poly(), g) * (c * c2)
        return out

    def conjugation_images(self, gcoord_names=None):
        """Images of generators under conjugation by a symbolic point.

        Returns (extended_ring, images) where images[name] is
        sum f1(g) f2 S(f3)(g) written with symbolic coordinates g_<name>.
        """
        if gcoord_names is None:
            gcoord_names = {g: "g_" + g for g in self.ring.generators}
        ext = self.ring.extended(extra_parameters=tuple(gcoord_names[g] for g in self.ring.generators))

        def eval_sym(poly):
            return poly.substitute({g: ext.var(gcoord_names[g]) for g in self.ring.generators}, ext)

        lift = {n: ext.var(n) for n in self.ring.names}
        images = {}
        for g in self.ring.generators:
            acc = ext.zero
            for (m1, m2, m3), c in _rank3_terms(self, g):
                acc = acc + eval_sym(m1.as_poly()) * m2.as_poly().substitute({}, ext) \
                    * eval_sym(self.antipode_monomial(m3)) * c
            images[g] = acc
        return ext, images

    # -- Lie data ---------------------------------------------------------------
    def lie_data(self):
        """Structure constants on the basis dual to the generators, from q."""
        if self._lie is None:
            n = self.ring.ngens
            names = ["u_" + g for g in self.ring.generators]
            brackets = {}
            for i in range(n):
                for j in range(i + 1, n):
                    vec = [ZERO] * n
                    for k, g in enumerate(self.ring.generators):
                        q = self.q.get(g)
                        if q is None:
                            continue
                        c = ZERO
                        for (m1, m2), v in q.terms.items():
                            if m1.degree() == 1 and m2.degree() == 1 and \
                               m1.param_degree() == 0 and m2.param_degree() == 0:
                                a = next(t for t in range(n) if m1.exps[t] == 1)
                                b = next(t for t in range(n) if m2.exps[t] == 1)
                                if (a, b) == (i, j):
                                    c += v
                                elif (a, b) == (j, i):
                                    c -= v
                        vec[k] = c
                    if any(vec):
                        brackets[(i, j)] = vec
            self._lie = LieAlgebraData(names, brackets)
        return self._lie

    # -- coset functions ---------------------------------------------------------
    def coinvariants(self, subgroup, degree_bound, side="left"):
        """Basis of functions of degree <= bound constant on (left/right/double) cosets."""
        if side not in ("left", "right", "double"):
            raise ValueError("side must be left, right or double")
        mons = self.ring.monomials_up_to(degree_bound)
        conditions = []
        if side in ("left", "double"):
            conditions.append(("left", {}))
        if side in ("right", "double"):
            conditions.append(("right", {}))

        trings = {}
        for which, _ in conditions:
            trings[which] = PolyRing(self.ring.generators,
                                     self.ring.parameters + tuple("c_" + t for t in subgroup.param_names))

        rows = {}

        def add(which, row_key, col, val):
            row = rows.setdefault((which, row_key), [ZERO] * len(mons))
            row[col] += val

        for col, m in enumerate(mons):
            delta = self.coproduct_monomial(m)
            for which, _ in conditions:
                tring = trings[which]
                rename = {t: "c_" + t for t in subgroup.param_names}
                for (m1, m2), c in delta.terms.items():
                    if which == "left":
                        keep, proj = m1, subgroup.restrict(m2.as_poly(), tring, rename)
                    else:
                        keep, proj = m2, subgroup.restrict(m1.as_poly(), tring, rename)
                    for pm, pc in proj.terms.items():
                        add(which, (keep, pm), col, c * pc)
                # subtract f (x) 1
                add(which, (m, tring.one_monomial), col, -ONE)

        matrix = [rows[k] for k in sorted(rows.keys(), key=lambda t: (t[0], grlex_key(t[1][0]), grlex_key(t[1][1])))]
        basis = linalg.nullspace(matrix, len(mons))
        out = []
        for vec in basis:
            p = self.ring.zero
            for col, c in enumerate(vec):
                if c:
                    p = p + mons[col].as_poly() * c
            out.append(p)
        return out

    # -- validation ----------------------------------------------------------------
    def validate(self, strict=False):
        checks = []

        def record(name, ok, detail=""):
            checks.append(ValidationCheck(name, ok, detail))

        ok_chain = True
        for g, q in self.q.items():
            i = self.gen_index(g)
            for (m1, m2), _ in q.terms.items():
                for mm in (m1, m2):
                    if mm.degree() == 0:
                        record("q-counit-free", False,
                               "q(%s) has a scalar slot entry" % g)
                        ok_chain = False
                    if mm.max_generator_index() >= i:
                        record("q-chain-containment", False,
                               "q(%s) involves a generator of index >= %d" % (g, i))
                        ok_chain = False
        if ok_chain:
            record("q-chain-containment", True)
            record("q-counit-free", True)
        else:
            # the recursive checks below assume the chain containment; a
            # violating presentation would not terminate, so stop here
            return ValidationReport(checks)

        ok = True
        for g in self.ring.generators:
            d = self.coproduct_gen(g)
            lhs = d.map_slot(1, self.coproduct_monomial)
            rhs = d.map_slot(2, self.coproduct_monomial)
            if lhs != rhs:
                record("coassociativity", False, "fails on %s" % g)
                ok = False
                break
        if ok:
            record("coassociativity", True)

        ok = True
        for g in self.ring.generators:
            d = self.coproduct_gen(g)
            left = d.apply_linear_slot(1, lambda p: p.counit()).to_poly()
            right = d.apply_linear_slot(2, lambda p: p.counit()).to_poly()
            x = self.ring.var(g)
            if left != x or right != x:
                record("counit-axiom", False, "fails on %s" % g)
                ok = False
                break
        if ok:
            record("counit-axiom", True)

        ok = True
        for g in self.ring.generators:
            acc = self.ring.zero
            for (m1, m2), c in self.coproduct_gen(g).terms.items():
                acc = acc + self.antipode_monomial(m1) * m2.as_poly() * c
            if not acc.is_zero():
                record("antipode-axiom", False, "fails on %s" % g)
                ok = False
                break
        if ok:
            record("antipode-axiom", True)

        lie = self.lie_data()
        jac, bad = lie.check_jacobi()
        record("lie-jacobi", jac, "" if jac else "triple %s" % (bad,))
        record("lie-nilpotent", lie.check_nilpotent())

        if strict:
            ok = True
            ext, images = self.conjugation_images()
            for g in self.ring.generators:
                i = self.gen_index(g)
                diff = images[g] - ext.var(g)
                for m, _ in diff.terms.items():
                    mx = m.max_generator_index()
                    if mx == 0 or mx >= i:
                        record("strict-central-chain", False,
                               "conjugate of %s shifts outside the lower chain" % g)
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                record("strict-central-chain", True)

        return ValidationReport(checks)


class ValidationCheck:
    def __init__(self, name, ok, detail=""):
        self.name = name
        self.ok = ok
        self.detail = detail

    def __repr__(self):
        s = "PASS" if self.ok else "FAIL"
        return "%s %s%s" % (s, self.name, (": " + self.detail) if self.detail else "")


class ValidationReport:
    def __init__(self, checks):
        self.checks = checks

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def first_failure(self):
        for c in self.checks:
            if not c.ok:
                return c
        return None

    def lines(self):
        return [repr(c) for c in self.checks]


def _rank3_terms(pres, gen):
    """Monomial triples of Delta^2(generator) with coefficients."""
    t = pres.iterated_coproduct_monomial(
        next(iter(pres.ring.var(gen).terms)), 2)
    return list(t.terms.items())


# Free-function aliases for the class methods above ---------------------------

def coproduct(pres, f):
    return pres.coproduct(f)


def iterated_coproduct(pres, f, k):
    return pres.iterated_coproduct(f, k)


def antipode(pres, f):
    return pres.antipode(f)


def point_mul(pres, p, q):
    return pres.point_mul(p, q)


def point_inv(pres, p):
    return pres.point_inv(p)


def coinvariants(pres, subgroup, degree_bound, side="left"):
    return pres.coinvariants(subgroup, degree_bound, side)


def validate_presentation(pres, strict=False):
    return pres.validate(strict=strict)
