"""Double-coset strata, abelianization, and 1-dimensional module groups.

The stratum attached to a point g is the closure of T.g.T; its vanishing
ideal is computed by eliminating the parametrization parameters from the
graph ideal of (s, t) -> s g t.  Everything downstream — two-sidedness in
the deformed algebra, polycentrality, quotient presentations, dimension
counts — reduces to Groebner normal forms against that ideal.

Dimension bookkeeping is deliberately two-route: the stratum dimension is
read off the staircase of its ideal, while dim(T cap gTg^{-1}) comes from
a separate elimination (the ideal of gTg^{-1} plus the ideal of T), so
the dimension law 2 dim T - dim T_g is a genuine cross-check rather than
a definition.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .groebner import (Ideal, TermOrder, buchberger, eliminate, krull_dimension,
                       normal_form, rename_into)
from .poly import ONE, ZERO, Monomial, Poly, PolyRing, grlex_key, render_poly
from .twist import TwistedPresentation, pairwise_commutators


class StratumError(ValueError):
    pass


def _coords_of_sgt(group, subgroup, point):
    """Coordinates of s.g.t in Q[s-params, t-params, group params]."""
    s_names = tuple("s_" + t for t in subgroup.param_names)
    t_names = tuple("t_" + t for t in subgroup.param_names)
    work = PolyRing(s_names + t_names, group.ring.parameters)

    def left(m):
        return subgroup.restrict(m.as_poly(), work, {t: "s_" + t for t in subgroup.param_names})

    def mid(m):
        v = group.evaluate(m.as_poly(), point)
        return v.substitute({}, work)

    def right(m):
        return subgroup.restrict(m.as_poly(), work, {t: "t_" + t for t in subgroup.param_names})

    coords = {}
    for gname in group.ring.generators:
        gen_mono = next(iter(group.ring.var(gname).terms))
        acc = work.zero
        for (m1, m2, m3), c in group.iterated_coproduct_monomial(gen_mono, 2).terms.items():
            a = left(m1)
            if a.is_zero():
                continue
            b = mid(m2)
            if b.is_zero():
                continue
            cc = right(m3)
            if cc.is_zero():
                continue
            acc = acc + a * b * cc * c
        coords[gname] = acc
    return work, coords


def double_coset_ideal(group, subgroup, point):
    """Vanishing ideal of the closure of T.g.T, in the group ring."""
    work, coords = _coords_of_sgt(group, subgroup, point)
    s_names = tuple("s_" + t for t in subgroup.param_names)
    t_names = tuple("t_" + t for t in subgroup.param_names)
    elim_ring = PolyRing(s_names + t_names + group.ring.generators, group.ring.parameters)
    gens = []
    for gname in group.ring.generators:
        graph = elim_ring.var(gname) - coords[gname].substitute({}, elim_ring)
        gens.append(graph)
    ideal = Ideal(elim_ring, gens)
    kept = eliminate(ideal, s_names + t_names)
    out = [rename_into(g, group.ring) for g in kept.groebner()]
    return Ideal(group.ring, out)


def conjugate_subgroup_ideal(group, subgroup, point):
    """Vanishing ideal of g T g^{-1} by elimination."""
    pinv = group.point_inv(point)
    t_names = tuple("t_" + t for t in subgroup.param_names)
    work = PolyRing(t_names, group.ring.parameters)

    def left(m):
        return group.evaluate(m.as_poly(), point).substitute({}, work)

    def mid(m):
        return subgroup.restrict(m.as_poly(), work, {t: "t_" + t for t in subgroup.param_names})

    def right(m):
        return group.evaluate(m.as_poly(), pinv).substitute({}, work)

    elim_ring = PolyRing(t_names + group.ring.generators, group.ring.parameters)
    gens = []
    for gname in group.ring.generators:
        gen_mono = next(iter(group.ring.var(gname).terms))
        acc = work.zero
        for (m1, m2, m3), c in group.iterated_coproduct_monomial(gen_mono, 2).terms.items():
            a = left(m1)
            if a.is_zero():
                continue
            b = mid(m2)
            if b.is_zero():
                continue
            cc = right(m3)
            if cc.is_zero():
                continue
            acc = acc + a * b * cc * c
        gens.append(elim_ring.var(gname) - acc.substitute({}, elim_ring))
    kept = eliminate(Ideal(elim_ring, gens), t_names)
    return Ideal(group.ring, [rename_into(g, group.ring) for g in kept.groebner()])


def subgroup_ideal(group, subgroup):
    """Vanishing ideal of T itself (the identity double coset)."""
    return double_coset_ideal(group, subgroup, group.identity_point())


def stabilizer_dimension(group, subgroup, point):
    """dim(T cap gTg^{-1}) on the generic parameter fiber, by elimination."""
    it = subgroup_ideal(group, subgroup)
    ig = conjugate_subgroup_ideal(group, subgroup, point)
    return krull_dimension(it + ig)


def verify_two_sided(ideal, ctx):
    """Both deformed products of each ideal generator with each algebra
    generator must reduce to 0 against the ideal."""
    gb = ideal.groebner()
    order = TermOrder(ideal.ring)
    for p in ideal.gens:
        for gname in ctx.pres.ring.generators:
            x = ctx.pres.ring.var(gname)
            if not normal_form(ctx.mul(x, p), gb, order).is_zero():
                return False
            if not normal_form(ctx.mul(p, x), gb, order).is_zero():
                return False
    return True


def polycentral_check(sequence, ctx):
    """Each element must be central modulo its predecessors.

    Returns (ok, first_failing_index) with 1-based indexing.
    """
    ring = ctx.pres.ring
    order = TermOrder(ring)
    for k, y in enumerate(sequence):
        prefix = Ideal(ring, list(sequence[:k]))
        gb = prefix.groebner()
        for gname in ring.generators:
            x = ring.var(gname)
            c = ctx.commutator(y, x)
            if not normal_form(c, gb, order).is_zero():
                return False, k + 1
    return True, None


class WeylReport:
    """Outcome of matching quotient relations against the A_k pattern.

    `pairs` lists symplectically paired generator combinations with their
    scalar bracket; `central` lists combinations commuting with everything.
    `verdict` is 'A_k', 'A_k-with-centre' or 'unrecognized' — never a
    negative claim.
    """

    def __init__(self, verdict, pairs, central, side_conditions):
        self.verdict = verdict
        self.pairs = pairs
        self.central = central
        self.side_conditions = side_conditions

    def lines(self):
        out = ["weyl: %s" % self.verdict]
        for a, b, val in self.pairs:
            out.append("  pair (%s, %s) with bracket %s"
                       % (render_poly(a), render_poly(b), render_poly(val)))
        for z in self.central:
            out.append("  central %s" % render_poly(z))
        for s in self.side_conditions:
            out.append("  assuming %s != 0" % render_poly(s))
        return out


def weyl_detect(pres_relations, ring, variables=None):
    """Recognize scalar commutator matrices as Weyl-algebra patterns.

    Works over Q[parameters]: a division-free symplectic elimination pairs
    off generators two at a time and collects the kernel as central linear
    combinations (parameter pivots become side conditions).  Any
    non-scalar relation yields the verdict 'unrecognized'.
    """
    names = list(variables if variables is not None else ring.generators)
    n = len(names)
    mat = {}
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            f = pres_relations(names[i], names[j])
            if f.is_zero():
                mat[(i, j)] = ring.zero
                continue
            if f.degree() > 0:
                return WeylReport("unrecognized", [], [], [])
            mat[(i, j)] = f

    basis = [ring.var(nm) for nm in names]
    bracket = {(i, j): mat[(i, j)] for i in range(n) for j in range(n) if i != j}

    def brk(i, j):
        if i == j:
            return ring.zero
        return bracket[(i, j)]

    active = list(range(n))
    pairs = []
    side = []
    while True:
        pivot = None
        for ii in range(len(active)):
            for jj in range(ii + 1, len(active)):
                if not brk(active[ii], active[jj]).is_zero():
                    pivot = (active[ii], active[jj])
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, j = pivot
        pij = brk(i, j)
        pairs.append((basis[i], basis[j], pij))
        if not (len(pij.terms) == 1 and next(iter(pij.terms)).is_one()):
            side.append(_normalize_sign(pij))
        rest = [k for k in active if k not in (i, j)]
        # e_k' = M_ij e_k - M_kj e_i + M_ki e_j kills both pivot directions;
        # division-free, so parameter pivots stay polynomial.
        new_basis = {k: basis[k] * pij - basis[i] * brk(k, j) + basis[j] * brk(k, i)
                     for k in rest}
        new_bracket = {}
        for a in rest:
            for b in rest:
                if a == b:
                    continue
                ca = (pij, -brk(a, j), brk(a, i))
                cb = (pij, -brk(b, j), brk(b, i))
                vecs_a = (a, i, j)
                vecs_b = (b, i, j)
                val = ring.zero
                for xa, fa in zip(vecs_a, ca):
                    for xb, fb in zip(vecs_b, cb):
                        val = val + fa * fb * brk(xa, xb)
                new_bracket[(a, b)] = val
        for k in rest:
            basis[k] = new_basis[k]
        bracket = new_bracket
        active = rest

    central = [_scale_down(basis[k]) for k in active]
    if not pairs:
        verdict = "commutative"
    elif central:
        verdict = "A_%d-with-centre" % len(pairs)
    else:
        verdict = "A_%d" % len(pairs)
    return WeylReport(verdict, pairs, central, side)


def _content(p):
    """Greatest common scalar-and-parameter-monomial factor."""
    from math import gcd
    if p.is_zero():
        return None
    nums = 0
    dens = 1
    min_exps = None
    for m, c in p.terms.items():
        nums = gcd(nums, c.numerator)
        dens = dens * c.denominator // gcd(dens, c.denominator)
        pexps = m.exps[m.ring.ngens:]
        min_exps = pexps if min_exps is None else tuple(min(a, b) for a, b in zip(min_exps, pexps))
    return Fraction(nums, dens), min_exps


def _scale_down(p):
    """Divide by the content and normalize the leading sign."""
    if p.is_zero():
        return p
    scale, min_exps = _content(p)
    ring = p.ring
    terms = {}
    for m, c in p.terms.items():
        exps = list(m.exps)
        for t, e in enumerate(min_exps):
            exps[ring.ngens + t] -= e
        terms[Monomial(ring, tuple(exps))] = c / scale
    q = Poly(ring, terms)
    lead = max(q.terms, key=grlex_key)
    if q.terms[lead] < 0:
        q = -q
    return q


def _normalize_sign(p):
    """Divide by the rational content and fix the sign, keeping monomials."""
    if p.is_zero():
        return p
    scale, _ = _content(p)
    q = p * (ONE / scale)
    lead = max(q.terms, key=grlex_key)
    if q.terms[lead] < 0:
        q = -q
    return q


class Stratum:
    def __init__(self, name, point, ideal, quotient, dims, flags):
        self.name = name
        self.point = point
        self.ideal = ideal
        self.quotient = quotient
        self.dims = dims  # (dim T, dim T_g, krull dim of quotient)
        self.flags = flags

    def lines(self):
        dim_t, dim_tg, dim_q = self.dims
        out = ["stratum %s:" % self.name,
               "  ideal %s" % self.ideal.render(),
               "  dim T = %d, dim T_g = %d, dim quotient = %d" % (dim_t, dim_tg, dim_q),
               "  dimension law 2*dimT - dimTg == dim: %s"
               % ("pass" if 2 * dim_t - dim_tg == dim_q else "FAIL")]
        rels = self.quotient.lines()
        out.append("  quotient relations: " + ("; ".join(rels) if rels else "none (commutative)"))
        for k, v in sorted(self.flags.items()):
            if isinstance(v, (list, tuple)):
                for item in v:
                    out.append("  %s" % item)
            else:
                out.append("  %s: %s" % (k, v))
        return out


def stratum_presentation(group, ctx, subgroup, point, name="stratum", coinv_bound=3):
    """Full stratum report: ideal, two-sidedness, quotient, dimensions."""
    ideal = double_coset_ideal(group, subgroup, point)
    if not verify_two_sided(ideal, ctx):
        raise StratumError("double-coset ideal is not two-sided: invalid cocycle data")
    gb = ideal.groebner()
    order = TermOrder(group.ring)
    presentation = pairwise_commutators(ctx)
    reduced = {}
    for key, f in presentation.relations.items():
        reduced[key] = normal_form(f, gb, order)
    quotient = TwistedPresentation(group, reduced)
    dim_t = subgroup.dim
    dim_tg = stabilizer_dimension(group, subgroup, point)
    dim_q = krull_dimension(ideal)
    flags = {}
    flags["two-sided"] = "pass"
    if 2 * dim_t - dim_tg != dim_q:
        raise StratumError("dimension law fails: 2*%d - %d != %d" % (dim_t, dim_tg, dim_q))

    if dim_tg == dim_t:
        # g normalizes T: the ideal must be generated by coset functions
        # f - f(g) for f running over the left coset-invariant functions.
        basis = group.coinvariants(subgroup, coinv_bound, side="left")
        gens = []
        for f in basis:
            val = group.evaluate(f, point)
            gens.append(f - val)
        mgt = Ideal(group.ring, [p for p in gens if not p.is_zero()])
        flags["normalizing-case"] = "ideal == coset-function ideal: %s" \
            % ("pass" if mgt == ideal else "FAIL")

    free_vars = _free_variables(ideal)
    report = weyl_detect(quotient.relation, group.ring, variables=free_vars)
    flags["weyl"] = report.lines()
    return Stratum(name, point, ideal, quotient, (dim_t, dim_tg, dim_q), flags)


def _free_variables(ideal):
    """Generators not eliminated by a linear leading term of the basis."""
    ring = ideal.ring
    order = TermOrder(ring)
    eliminated = set()
    for g in ideal.groebner():
        m, _ = order.leading(g)
        if m.degree() == 1:
            for i in range(ring.ngens):
                if m.exps[i] == 1:
                    eliminated.add(ring.generators[i])
    return [g for g in ring.generators if g not in eliminated]


# -- abelianisation and the group of 1-dimensional modules -------------------

class GammaReport:
    def __init__(self, commutator_ideal, gamma_dim, hopf_ok, c0=None):
        self.commutator_ideal = commutator_ideal
        self.gamma_dim = gamma_dim
        self.hopf_ok = hopf_ok
        self.c0 = c0

    def lines(self):
        out = ["commutator ideal %s" % self.commutator_ideal.render(),
               "dim Gamma = %d" % self.gamma_dim,
               "hopf-ideal check: %s" % ("pass" if self.hopf_ok else "FAIL")]
        if self.c0 is not None:
            out.append(self.c0.describe())
        return out


def commutator_ideal_and_gamma(ctx, presentation=None):
    """The commutator ideal (generated by the f_ij), its basis and dimension."""
    pres = presentation if presentation is not None else pairwise_commutators(ctx)
    ring = ctx.pres.ring
    gens = [f for _, _, f in pres.nonzero()]
    ideal = Ideal(ring, gens)
    dim = krull_dimension(ideal)
    hopf_ok = hopf_ideal_check(ctx.pres, ideal)
    return GammaReport(ideal, dim, hopf_ok)


def hopf_ideal_check(group, ideal):
    """Delta(gen) must vanish in (H/I) (x) (H/I) for every basis element."""
    gb = ideal.groebner()
    order = TermOrder(group.ring)
    for g in ideal.groebner():
        delta = group.coproduct(g)
        residue = {}
        for (m1, m2), c in delta.terms.items():
            n1 = normal_form(m1.as_poly(), gb, order)
            n2 = normal_form(m2.as_poly(), gb, order)
            if n1.is_zero() or n2.is_zero():
                continue
            for a, ca in n1.terms.items():
                for b, cb in n2.terms.items():
                    key = (a, b)
                    v = residue.get(key, ZERO) + c * ca * cb
                    if v == 0:
                        residue.pop(key, None)
                    else:
                        residue[key] = v
        if residue:
            return False
    return True


# -- the cobracket and the subgroup F ----------------------------------------

class CobracketData:
    """The map x -> [x (x) 1 + 1 (x) x, r] on a quasi-Frobenius subalgebra."""

    def __init__(self, lie, tangent_basis, rmatrix):
        self.lie = lie
        self.basis = [list(map(Fraction, v)) for v in tangent_basis]
        d = len(self.basis)
        self.dim = d
        # express r in the wedge basis of the subalgebra
        cols = []
        keys = [(i, j) for i in range(d) for j in range(i + 1, d)]
        rows = []
        n = lie.n
        for a in range(n):
            for b in range(n):
                row = []
                for (i, j) in keys:
                    row.append(self.basis[i][a] * self.basis[j][b]
                               - self.basis[j][a] * self.basis[i][b])
                rows.append(row)
        target = [rmatrix.matrix[a][b] for a in range(n) for b in range(n)]
        sol = linalg.solve(rows, target)
        if sol is None:
            raise StratumError("r-matrix is not supported on the subalgebra")
        self.r_wedge = {k: v for k, v in zip(keys, sol) if v != 0}
        # brackets of the subalgebra in its own basis (closure check)
        self.sub_brackets = {}
        for i in range(d):
            for j in range(i + 1, d):
                v = lie.bracket(self.basis[i], self.basis[j])
                coords = linalg.solve([[self.basis[k][t] for k in range(d)]
                                       for t in range(n)], v)
                if coords is None:
                    raise StratumError("subalgebra basis is not bracket-closed")
                self.sub_brackets[(i, j)] = coords

    def sub_bracket(self, i, j):
        if i == j:
            return [ZERO] * self.dim
        if (i, j) in self.sub_brackets:
            return list(self.sub_brackets[(i, j)])
        return [-c for c in self.sub_brackets.get((j, i), [ZERO] * self.dim)]

    def delta_matrix(self):
        """Matrix of x -> [x.1 + 1.x, r] from the basis to the wedge basis."""
        d = self.dim
        keys = [(i, j) for i in range(d) for j in range(i + 1, d)]
        cols = []
        for k in range(d):
            out = {}
            for (i, j), rv in self.r_wedge.items():
                # [x (x) 1 + 1 (x) x, ui /\ uj] = [x,ui] /\ uj + ui /\ [x,uj]
                bki = self.sub_bracket(k, i)
                bkj = self.sub_bracket(k, j)
                for e in range(d):
                    if bki[e]:
                        _wedge_add(out, e, j, rv * bki[e])
                    if bkj[e]:
                        _wedge_add(out, i, e, rv * bkj[e])
            col = [out.get(key, ZERO) for key in keys]
            cols.append(col)
        return [[cols[k][t] for k in range(d)] for t in range(len(keys))]

    def kernel(self):
        """Basis of ker(delta) in subalgebra coordinates."""
        return linalg.nullspace(self.delta_matrix(), self.dim)

    def kernel_in_ambient(self):
        out = []
        for v in self.kernel():
            w = [ZERO] * self.lie.n
            for k, c in enumerate(v):
                for t in range(self.lie.n):
                    w[t] += c * self.basis[k][t]
            out.append(w)
        return out

    def kernel_is_bracket_closed(self):
        ker = self.kernel()
        if not ker:
            return True
        red, _ = linalg.rref(ker)
        for i in range(len(ker)):
            for j in range(len(ker)):
                b = [ZERO] * self.dim
                for a, ca in enumerate(ker[i]):
                    for c, cc in enumerate(ker[j]):
                        bb = self.sub_bracket(a, c)
                        for t in range(self.dim):
                            b[t] += ca * cc * bb[t]
                if any(b) and linalg.matrix_rank(red + [b]) > len(red):
                    return False
        return True


def _wedge_add(table, i, j, val):
    if i == j or val == 0:
        return
    if i < j:
        key = (i, j)
    else:
        key, val = (j, i), -val
    v = table.get(key, ZERO) + val
    if v == 0:
        table.pop(key, None)
    else:
        table[key] = v


def subgroup_F(lie, tangent_basis, rmatrix):
    """ker(delta) with its sanity checks; returns (CobracketData, kernel)."""
    data = CobracketData(lie, tangent_basis, rmatrix)
    ker = data.kernel()
    expected = data.dim - lie.derived_dim(sub_basis=data.basis)
    if len(ker) != expected:
        raise StratumError("dim ker(delta) = %d but dim(t/[t,t]) = %d"
                           % (len(ker), expected))
    if not data.kernel_is_bracket_closed():
        raise StratumError("ker(delta) is not bracket-closed")
    return data, ker


# -- the fixed-cocycle locus ---------------------------------------------------

class C0Report:
    def __init__(self, ideal, bound, matches_gamma, verdict):
        self.ideal = ideal
        self.bound = bound
        self.matches_gamma = matches_gamma
        self.verdict = verdict

    def describe(self):
        return "fixed-cocycle locus at bound %d: %s (ideal %s)" \
            % (self.bound, self.verdict, self.ideal.render())


def c0_solver(group, j, degree_bound, gamma_ideal=None):
    """Conditions J^g = J for a symbolic point g, collected as an ideal.

    Because (g (x) g) is convolution invertible with inverse
    (g^{-1} (x) g^{-1}), the fixed-cocycle condition is equivalent to the
    commutation (g (x) g) * J = J * (g (x) g); for each monomial pair
    within the bound this reads

        sum m1_1(g) m2_1(g) J(m1_2, m2_2) - J(m1_1, m2_1) m1_2(g) m2_2(g),

    a polynomial in the symbolic coordinates of g.  The resulting ideal
    cuts out the fixed locus up to the bound; when a reference ideal is
    supplied the two are compared as reduced bases.
    """
    ring = group.ring
    gcoords = PolyRing(tuple("g_" + g for g in ring.generators), ring.parameters)

    def sym(m):
        """Evaluate a parameter-free monomial at the symbolic point."""
        return Monomial(gcoords, m.exps[:ring.ngens] + (0,) * len(ring.parameters))

    mons = ring.monomials_up_to(degree_bound, include_one=False)
    by_degree = {}
    for m in mons:
        by_degree.setdefault(m.degree(), []).append(m)
    deltas = {m: list(group.coproduct_monomial(m).terms.items()) for m in mons}
    back = {("g_" + g): g for g in ring.generators}
    order = TermOrder(ring)
    kept = []
    basis = []
    for d1 in sorted(by_degree):
        for d2 in sorted(by_degree):
            if d1 + d2 > degree_bound:
                continue
            for m1 in by_degree[d1]:
                t1 = deltas[m1]
                for m2 in by_degree[d2]:
                    t2 = deltas[m2]
                    acc = {}
                    for (a1, a2), c1 in t1:
                        for (b1, b2), c2 in t2:
                            v = j.pair(a2, b2)
                            if v:
                                key = sym(a1).mul(sym(b1))
                                w = acc.get(key, ZERO) + c1 * c2 * v
                                if w == 0:
                                    acc.pop(key, None)
                                else:
                                    acc[key] = w
                            v = j.pair(a1, b1)
                            if v:
                                key = sym(a2).mul(sym(b2))
                                w = acc.get(key, ZERO) - c1 * c2 * v
                                if w == 0:
                                    acc.pop(key, None)
                                else:
                                    acc[key] = w
                    if not acc:
                        continue
                    condition = rename_into(Poly(gcoords, acc), ring, back)
                    # keep only conditions that add new constraints
                    if basis and normal_form(condition, basis, order).is_zero():
                        continue
                    kept.append(condition)
                    basis = buchberger(kept, order)
    ideal = Ideal(ring, kept)
    verdict = "inconclusive at bound %d" % degree_bound
    matches = None
    if gamma_ideal is not None:
        matches = ideal == gamma_ideal
        if matches:
            verdict = "matches the 1-dimensional module group"
        else:
            sub = all(gamma_ideal.contains(p) for p in ideal.groebner())
            verdict = ("inconclusive at bound %d" % degree_bound) if sub else "MISMATCH"
    return C0Report(ideal, degree_bound, matches, verdict)
