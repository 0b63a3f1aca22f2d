"""Bilinear 2-cocycles on a group presentation and their calculus.

A cocycle J is an evaluator on pairs of polynomials, bilinear over
Q[parameters], unital (J(f,1) = eps(f) = J(1,f)) and convolution
invertible.  Evaluators are built from:

  * the pair of counits (the trivial cocycle),
  * an antisymmetric r-matrix via the exponential recipe
        J(f,g) = sum_k (1/ (k! 2^k)) < r-words of length k, f (x) g >,
    where tangent functionals pair with functions through iterated
    coproducts,
  * pullback along a coalgebra-compatible algebra surjection,
  * a gauge transformation by an invertible functional,
  * conjugation by a group point,
  * an explicit value table on monomial pairs up to a degree bound.

The exponential sum truncates at the coradical degree of its arguments
(not their polynomial degree: q-corrections let length-k words pair
nontrivially with low-degree functions).  Convolution inverses are exact:
the exponential kind negates its r-matrix, the other kinds use the
terminating geometric series of (eps (x) eps) - J.

Evaluators memoize values per monomial pair; the caches never change a
result, only its cost.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .poly import ONE, ZERO, Monomial, Poly, TensorPoly, grlex_key


class CocycleBoundError(ValueError):
    """A table-backed evaluator was asked for a pair beyond its bound."""


class CocycleInputError(ValueError):
    pass


class RMatrix:
    """Antisymmetric rational matrix over the Lie basis dual to the generators.

    Represents r = sum_{k<l} r[k][l] (u_k (x) u_l - u_l (x) u_k).
    """

    def __init__(self, n, entries):
        self.n = n
        mat = [[ZERO] * n for _ in range(n)]
        for (i, j), val in entries.items():
            val = Fraction(val)
            mat[i][j] += val
            mat[j][i] -= val
        self.matrix = mat

    def entry(self, i, j):
        return self.matrix[i][j]

    def support_indices(self):
        return sorted(i for i in range(self.n)
                      if any(self.matrix[i][j] != 0 for j in range(self.n)))

    def is_nondegenerate_on_support(self):
        idx = self.support_indices()
        sub = [[self.matrix[i][j] for j in idx] for i in idx]
        return linalg.det(sub) != 0

    def support_is_subalgebra(self, lie):
        idx = self.support_indices()
        span = [[ONE if k == i else ZERO for k in range(self.n)] for i in idx]
        red, _ = linalg.rref(span)
        for a in idx:
            for b in idx:
                v = lie.bracket_basis(a, b)
                if any(v) and linalg.matrix_rank(red + [v]) > len(red):
                    return False
        return True

    def permuted(self, perm):
        """Basis permutation: new index i corresponds to old perm[i]."""
        entries = {}
        for i in range(self.n):
            for j in range(i + 1, self.n):
                v = self.matrix[perm[i]][perm[j]]
                if v:
                    entries[(i, j)] = v
        return RMatrix(self.n, entries)


def cybe_check(lie, r):
    """True iff [r12,r13] + [r12,r23] + [r13,r23] = 0 exactly."""
    n = lie.n
    total = {}

    def add(i, j, k, c):
        if c == 0:
            return
        key = (i, j, k)
        v = total.get(key, ZERO) + c
        if v == 0:
            total.pop(key, None)
        else:
            total[key] = v

    m = r.matrix
    for a in range(n):
        for b in range(n):
            rab = m[a][b]
            if rab == 0:
                continue
            for c in range(n):
                for d in range(n):
                    rcd = m[c][d]
                    if rcd == 0:
                        continue
                    coef = rab * rcd
                    br = lie.bracket_basis(a, c)
                    for e in range(n):
                        add(e, b, d, coef * br[e])
                    br = lie.bracket_basis(b, c)
                    for e in range(n):
                        add(a, e, d, coef * br[e])
                    br = lie.bracket_basis(b, d)
                    for e in range(n):
                        add(a, c, e, coef * br[e])
    return not total


def quasi_frobenius_check(lie, omega, sub_basis=None):
    """Nondegeneracy plus the cyclic 2-cocycle identity on basis triples.

    `omega` is a square antisymmetric matrix over the given basis of a
    subalgebra (default: the full basis).
    """
    basis = sub_basis
    if basis is None:
        basis = [[ONE if i == k else ZERO for k in range(lie.n)] for i in range(lie.n)]
    d = len(basis)
    if len(omega) != d or any(len(row) != d for row in omega):
        raise CocycleInputError("omega has the wrong shape")
    for i in range(d):
        for j in range(d):
            if omega[i][j] != -omega[j][i]:
                return False
    if linalg.det(omega) == 0:
        return False

    def express(v):
        sol = linalg.solve([[basis[k][t] for k in range(d)] for t in range(lie.n)], v)
        if sol is None:
            raise CocycleInputError("bracket leaves the subalgebra span")
        return sol

    for i in range(d):
        for j in range(d):
            for k in range(d):
                bij = express(lie.bracket(basis[i], basis[j]))
                bki = express(lie.bracket(basis[k], basis[i]))
                bjk = express(lie.bracket(basis[j], basis[k]))
                s = ZERO
                for t in range(d):
                    s += bij[t] * omega[t][k] + bki[t] * omega[t][j] + bjk[t] * omega[t][i]
                if s != 0:
                    return False
    return True


class TangentFunctional:
    """An eps-derivation at the identity: a vector over the generators."""

    def __init__(self, pres, coeffs):
        self.pres = pres
        self.coeffs = [Fraction(c) for c in coeffs]

    def __call__(self, f):
        val = ZERO
        for i, g in enumerate(self.pres.ring.generators):
            if self.coeffs[i]:
                val += self.coeffs[i] * f.coefficient_of_var(g)
        return val


class Cocycle:
    """Base evaluator.  Subclasses implement `_pair` on generator monomials."""

    kind = "abstract"

    def __init__(self, pres):
        self.pres = pres
        self._cache = {}
        self._inv_memo = None

    def cached_inverse(self):
        if self._inv_memo is None:
            self._inv_memo = self.inverse()
        return self._inv_memo

    # -- core -------------------------------------------------------------
    def _pair(self, m1, m2):
        raise NotImplementedError

    def pair(self, m1, m2):
        """Value on a pair of parameter-free monomials (cached)."""
        if m1.is_one():
            return ONE if m2.is_one() else ZERO
        if m2.is_one():
            return ZERO
        key = (m1, m2)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._pair(m1, m2)
            self._cache[key] = hit
        return hit

    def eval(self, f, g):
        """Bilinear extension; returns a Poly (scalar when parameter-free)."""
        ring = self.pres.ring
        out = ring.zero
        for m1, c1 in f.terms.items():
            g1, p1 = m1.split_params()
            for m2, c2 in g.terms.items():
                g2, p2 = m2.split_params()
                v = self.pair(g1, g2)
                if v:
                    out = out + p1.mul(p2).as_poly() * (c1 * c2 * v)
        return out

    def scalar(self, f, g):
        """Evaluation that must come out parameter-free."""
        v = self.eval(f, g)
        if v.is_zero():
            return ZERO
        if v.degree() > 0 or len(v.terms) != 1 or not next(iter(v.terms)).is_one():
            raise ValueError("cocycle value is parameter-valued: %r" % v)
        return v.counit()

    # -- derived evaluators -------------------------------------------------
    def inverse(self):
        return NeumannInverse(self)

    def swap(self):
        return SwappedCocycle(self)

    def identity_tag(self):
        return "%s-%d" % (self.kind, id(self))


class CounitPair(Cocycle):
    kind = "counit_pair"

    def _pair(self, m1, m2):
        return ZERO  # both arguments nonconstant here

    def inverse(self):
        return self

    def swap(self):
        return self


class ExponentialCocycle(Cocycle):
    """J = (eps (x) eps) o exp(r/2) through iterated-coproduct word pairing."""

    kind = "exponential"

    def __init__(self, pres, rmatrix, half=True, negate=False, extra_orders=0):
        super().__init__(pres)
        self.rmatrix = rmatrix
        self.half = half
        self.negate = negate
        self.extra_orders = extra_orders
        self._support = set(rmatrix.support_indices())

    def _word_vector(self, m, k):
        table = self.pres.word_table(m, k)
        return {w: c for w, c in table.items() if all(i in self._support for i in w)}

    def _pair(self, m1, m2):
        # The sum truncates at the coradical degree: length-k words pair as
        # degree-k distributions, which kill the k-th coradical filtration
        # layer.  `extra_orders` exists so tests can confirm that adding
        # terms beyond the bound never changes a value.
        kmax = min(self.pres.corad_degree_monomial(m1),
                   self.pres.corad_degree_monomial(m2)) + self.extra_orders
        total = ZERO
        mat = self.rmatrix.matrix
        scale_base = Fraction(1, 2) if self.half else ONE
        if self.negate:
            scale_base = -scale_base
        fact = ONE
        for k in range(1, kmax + 1):
            fact *= k
            left = self._word_vector(m1, k)
            if not left:
                continue
            right = self._word_vector(m2, k)
            if not right:
                continue
            contrib = ZERO
            for w, cw in left.items():
                for w2, cw2 in right.items():
                    prod = cw * cw2
                    for a, b in zip(w, w2):
                        prod *= mat[a][b]
                        if prod == 0:
                            break
                    contrib += prod
            if contrib:
                total += contrib * scale_base ** k / fact
        return total

    def inverse(self):
        return ExponentialCocycle(self.pres, self.rmatrix, self.half,
                                  not self.negate, self.extra_orders)


class PullbackCocycle(Cocycle):
    """J_G(f,g) = J_T(pi f, pi g) along a coalgebra-compatible surjection."""

    kind = "pullback"

    def __init__(self, pres, inner, images, check=True):
        super().__init__(pres)
        self.inner = inner
        self.images = {k: v for k, v in images.items()}
        if check:
            self._check_bialgebra_map()

    def _check_bialgebra_map(self):
        tp = self.inner.pres
        for g in self.pres.ring.generators:
            img = self.images.get(g, tp.ring.zero)
            lhs = tp.coproduct(img)
            rhs = TensorPoly.zero(tp.ring, 2)
            for (m1, m2), c in self.pres.coproduct_gen(g).terms.items():
                rhs = rhs + TensorPoly.from_polys([self._push(m1.as_poly()),
                                                   self._push(m2.as_poly())], c)
            if lhs != rhs:
                raise CocycleInputError(
                    "images do not define a coalgebra map (fails on %s)" % g)

    def _push(self, f):
        target = self.inner.pres.ring
        images = dict(self.images)
        for p in self.pres.ring.parameters:
            if p in target.index:
                images.setdefault(p, target.var(p))
        return f.substitute(images, target)

    def _pair(self, m1, m2):
        v = self.inner.eval(self._push(m1.as_poly()), self._push(m2.as_poly()))
        if v.is_zero():
            return ZERO
        if v.degree() > 0:
            raise ValueError("pullback produced a non-scalar value")
        return v.counit()

    def inverse(self):
        return PullbackCocycle(self.pres, self.inner.inverse(), self.images, check=False)


class TableCocycle(Cocycle):
    """Explicit values on monomial pairs up to a declared degree bound."""

    kind = "table"

    def __init__(self, pres, table, bound):
        super().__init__(pres)
        self.table = dict(table)
        self.bound = bound

    def _pair(self, m1, m2):
        if m1.degree() > self.bound or m2.degree() > self.bound:
            raise CocycleBoundError(
                "pair (%r, %r) exceeds the declared bound %d" % (m1, m2, self.bound))
        return self.table.get((m1, m2), ZERO)


class CorrectedCocycle(Cocycle):
    """An evaluator plus a sparse correction table, total-degree bounded.

    Used to upgrade the exponential evaluator of a nonabelian r-matrix to a
    genuine bounded cocycle: the corrections are solved so that the cocycle
    identity holds on every monomial triple whose referenced pairs stay
    within the solved range.  Out-of-range pairs raise rather than silently
    extrapolate.
    """

    kind = "corrected"

    def __init__(self, base, corrections, total_bound):
        super().__init__(base.pres)
        self.base = base
        self.corrections = dict(corrections)
        self.total_bound = total_bound

    def _pair(self, m1, m2):
        if m1.degree() + m2.degree() > self.total_bound:
            raise CocycleBoundError(
                "pair (%r, %r) exceeds the solved total degree %d"
                % (m1, m2, self.total_bound))
        return self.base.pair(m1, m2) + self.corrections.get((m1, m2), ZERO)


def solve_cocycle_corrections(pres, base, total_bound):
    """Corrections making `base` satisfy the cocycle identity within bound.

    Requires every q-tensor slot entry to have polynomial degree 1 (true
    for coordinate rings presented in matrix coordinates): then identity
    instances with total degree within the bound only reference pairs
    within the bound.  Instances are processed by increasing coradical
    level; at a given level an instance is linear in exactly the two top
    corrections x(ab, c) and x(a, bc), a difference-constraint graph solved
    by breadth-first propagation.  Roots keep the base value, so the result
    is deterministic.  Raises if the constraints are inconsistent.
    """
    for g, q in pres.q.items():
        for (m1, m2), _ in q.terms.items():
            if m1.degree() != 1 or m2.degree() != 1:
                raise CocycleInputError(
                    "correction solving needs degree-1 coproduct corrections")
    ring = pres.ring
    mons = ring.monomials_up_to(total_bound - 2, include_one=False)

    table = {}

    def value(m1, m2):
        if m1.is_one():
            return ONE if m2.is_one() else ZERO
        if m2.is_one():
            return ZERO
        key = (m1, m2)
        if key in table:
            v = table[key]
        else:
            v = base.pair(m1, m2)
            table[key] = v
        return v

    def defect(a, b, c):
        lhs = ZERO
        for (a1, a2), c1 in pres.coproduct_monomial(a).terms.items():
            for (b1, b2), c2 in pres.coproduct_monomial(b).terms.items():
                v2 = value(a2, b2)
                if v2 == 0:
                    continue
                v1 = value(a1.mul(b1), c)
                if v1 == 0:
                    continue
                lhs += c1 * c2 * v1 * v2
        rhs = ZERO
        for (b1, b2), c2 in pres.coproduct_monomial(b).terms.items():
            for (c1m, c2m), c3 in pres.coproduct_monomial(c).terms.items():
                v2 = value(b2, c2m)
                if v2 == 0:
                    continue
                v1 = value(a, b1.mul(c1m))
                if v1 == 0:
                    continue
                rhs += c2 * c3 * v1 * v2
        return lhs - rhs

    by_level = {}
    for a in mons:
        for b in mons:
            if a.degree() + b.degree() > total_bound - 1:
                continue
            for c in mons:
                if a.degree() + b.degree() + c.degree() > total_bound:
                    continue
                lvl = (pres.corad_degree_monomial(a) + pres.corad_degree_monomial(b)
                       + pres.corad_degree_monomial(c))
                by_level.setdefault(lvl, []).append((a, b, c))

    corrections = {}
    for level in sorted(by_level):
        # difference constraints: x(ab, c) - x(a, bc) = -defect(a, b, c)
        adjacency = {}
        nodes = set()
        for a, b, c in by_level[level]:
            d = defect(a, b, c)
            u = (a.mul(b), c)
            v = (a, b.mul(c))
            if u == v:
                if d != 0:
                    raise CocycleInputError(
                        "inconsistent self-constraint at level %d" % level)
                continue
            nodes.add(u)
            nodes.add(v)
            adjacency.setdefault(u, []).append((v, d))
            adjacency.setdefault(v, []).append((u, -d))
        assign = {}
        for root in sorted(nodes, key=lambda p: (grlex_key(p[0]), grlex_key(p[1]))):
            if root in assign:
                continue
            assign[root] = ZERO
            queue = [root]
            while queue:
                cur = queue.pop(0)
                for nxt, diff in adjacency.get(cur, []):
                    want = assign[cur] + diff
                    if nxt in assign:
                        if assign[nxt] != want:
                            raise CocycleInputError(
                                "inconsistent correction constraints at level %d" % level)
                    else:
                        assign[nxt] = want
                        queue.append(nxt)
        for key in sorted(assign, key=lambda p: (grlex_key(p[0]), grlex_key(p[1]))):
            x = assign[key]
            if x != 0:
                corrections[key] = corrections.get(key, ZERO) + x
                table[key] = value(*key) + x if key not in table else table[key] + x
    return corrections


class SwappedCocycle(Cocycle):
    kind = "swap"

    def __init__(self, inner):
        super().__init__(inner.pres)
        self.inner = inner

    def _pair(self, m1, m2):
        return self.inner.pair(m2, m1)

    def inverse(self):
        return SwappedCocycle(self.inner.inverse())

    def swap(self):
        return self.inner


class NeumannInverse(Cocycle):
    """Convolution inverse via J^{-1} = eps.eps + (eps.eps - J) * J^{-1}.

    Terminates on every pair because (eps.eps - J) vanishes whenever either
    argument is scalar, so the recursion strictly reduces total degree.
    """

    kind = "inverse"

    def __init__(self, inner):
        super().__init__(inner.pres)
        self.inner = inner

    def _pair(self, m1, m2):
        # N = eps.eps - J; J^{-1}(a,b) = eps(a)eps(b) + sum N(a1,b1) J^{-1}(a2,b2),
        # where the N factor needs both of a1, b1 nonconstant.
        pres = self.pres
        total = ZERO
        d1 = pres.coproduct_monomial(m1)
        d2 = pres.coproduct_monomial(m2)
        for (a1, a2), c1 in d1.terms.items():
            if a1.is_one():
                continue
            for (b1, b2), c2 in d2.terms.items():
                if b1.is_one():
                    continue
                n = -self.inner.pair(*_genparts(a1, b1))
                if n == 0:
                    continue
                rest = self.pair(*_genparts(a2, b2))
                if rest == 0:
                    continue
                pa, pb = a1.split_params()[1], b1.split_params()[1]
                pc, pd = a2.split_params()[1], b2.split_params()[1]
                if not (pa.is_one() and pb.is_one() and pc.is_one() and pd.is_one()):
                    raise ValueError("parameters inside inverse recursion")
                total += c1 * c2 * n * rest
        return total

    def inverse(self):
        return self.inner


def _genparts(m1, m2):
    g1, _ = m1.split_params()
    g2, _ = m2.split_params()
    return g1, g2


class FunctionalTable:
    """An invertible functional chi with chi(1) = 1, given on monomials.

    Missing monomials evaluate to 0.  The convolution inverse is computed
    by the terminating geometric series of (eps - chi).
    """

    def __init__(self, pres, values):
        self.pres = pres
        self.values = {}
        for m, v in values.items():
            if not isinstance(m, Monomial):
                raise CocycleInputError("functional keys must be monomials")
            self.values[m] = Fraction(v)
        if self.values.get(pres.ring.one_monomial, ZERO) != 1:
            raise CocycleInputError("functional must send 1 to 1")
        self._inv_cache = {}

    @classmethod
    def from_point(cls, pres, point, bound):
        vals = {}
        for m in pres.ring.monomials_up_to(bound):
            v = pres.evaluate_scalar(m.as_poly(), point)
            if v.degree() > 0:
                raise CocycleInputError("point has parameter coordinates")
            c = v.counit()
            if c:
                vals[m] = c
        vals[pres.ring.one_monomial] = ONE
        return cls(pres, vals)

    def __call__(self, m):
        if isinstance(m, Poly):
            return sum((c * self(mm) for mm, c in m.terms.items()), ZERO)
        g, p = m.split_params()
        if not p.is_one():
            raise CocycleInputError("functional applied to a parameter monomial")
        return self.values.get(g, ZERO)

    def inv(self, m):
        if isinstance(m, Poly):
            return sum((c * self.inv(mm) for mm, c in m.terms.items()), ZERO)
        if m.is_one():
            return ONE
        hit = self._inv_cache.get(m)
        if hit is not None:
            return hit
        total = ZERO
        for (a1, a2), c in self.pres.coproduct_monomial(m).terms.items():
            if a1.is_one():
                continue
            n = -self(a1)
            if n == 0:
                continue
            total += c * n * (self.inv(a2) if not a2.is_one() else ONE)
        self._inv_cache[m] = total
        return total


class GaugeCocycle(Cocycle):
    """J^chi(a,b) = sum chi(a1 b1) J(a2,b2) chi^{-1}(a3) chi^{-1}(b3)."""

    kind = "gauge"

    def __init__(self, pres, inner, chi):
        super().__init__(pres)
        self.inner = inner
        self.chi = chi

    def _pair(self, m1, m2):
        pres = self.pres
        total = ZERO
        for (a1, a2, a3), c1 in pres.iterated_coproduct_monomial(m1, 2).terms.items():
            for (b1, b2, b3), c2 in pres.iterated_coproduct_monomial(m2, 2).terms.items():
                head = self.chi(a1.mul(b1).as_poly())
                if head == 0:
                    continue
                mid = self.inner.pair(a2, b2)
                if mid == 0:
                    continue
                tail = self.chi.inv(a3) * self.chi.inv(b3)
                if tail == 0:
                    continue
                total += c1 * c2 * head * mid * tail
        return total

    def inverse(self):
        return GaugeCocycle(self.pres, self.inner.inverse(), self.chi)


class ConjugateCocycle(Cocycle):
    """J^g = (g (x) g) * J * (g^{-1} (x) g^{-1}) for a rational point g."""

    kind = "conjugate"

    def __init__(self, pres, inner, point):
        super().__init__(pres)
        self.inner = inner
        self.point = point
        self.point_inv = pres.point_inv(point)

    def _eval_at(self, m, point):
        v = self.pres.evaluate_scalar(m.as_poly(), point)
        if v.degree() > 0:
            raise CocycleInputError("conjugation point must have scalar coordinates")
        return v.counit()

    def _pair(self, m1, m2):
        pres = self.pres
        total = ZERO
        for (a1, a2, a3), c1 in pres.iterated_coproduct_monomial(m1, 2).terms.items():
            ha = self._eval_at(a1, self.point)
            if ha == 0:
                continue
            ta = self._eval_at(a3, self.point_inv)
            if ta == 0:
                continue
            for (b1, b2, b3), c2 in pres.iterated_coproduct_monomial(m2, 2).terms.items():
                hb = self._eval_at(b1, self.point)
                if hb == 0:
                    continue
                tb = self._eval_at(b3, self.point_inv)
                if tb == 0:
                    continue
                mid = self.inner.pair(a2, b2)
                if mid == 0:
                    continue
                total += c1 * c2 * ha * hb * mid * ta * tb
        return total

    def inverse(self):
        return ConjugateCocycle(self.pres, self.inner.inverse(), self.point)


def convolution_product(pres, left, right):
    """(F * G)(f,g) = sum F(f1,g1) G(f2,g2) as a plain evaluator."""

    class _Conv(Cocycle):
        kind = "convolution"

        def _pair(self, m1, m2):
            total = ZERO
            for (a1, a2), c1 in pres.coproduct_monomial(m1).terms.items():
                for (b1, b2), c2 in pres.coproduct_monomial(m2).terms.items():
                    v1 = left.pair(*_genparts(a1, b1))
                    if v1 == 0:
                        continue
                    v2 = right.pair(*_genparts(a2, b2))
                    if v2 == 0:
                        continue
                    total += c1 * c2 * v1 * v2
            return total

    return _Conv(pres)


def convolution_inverse(j):
    return j.inverse()


def pullback_cocycle(pres, inner, images, check=True):
    return PullbackCocycle(pres, inner, images, check=check)


def gauge_transform(j, chi):
    return GaugeCocycle(j.pres, j, chi)


def conjugate_cocycle(j, point):
    return ConjugateCocycle(j.pres, j, point)


def cocycle_eval(j, f, g):
    return j.eval(f, g)


class CocycleIdentityReport:
    def __init__(self, ok, bound, checked, failure=None):
        self.ok = ok
        self.bound = bound
        self.checked = checked
        self.failure = failure

    def __repr__(self):
        if self.ok:
            return "cocycle identity PASS at bound %d (%d instances)" % (self.bound, self.checked)
        return "cocycle identity FAIL at bound %d on %r" % (self.bound, self.failure)


def verify_cocycle_identity(j, degree_bound, jinv=None):
    """Check the 2-cocycle identity and unitality on monomials within bound.

    The identity sum J(a1 b1, c) J(a2, b2) = sum J(a, b1 c1) J(b2, c2) is
    enumerated over nonconstant monomial triples with total degree at most
    `degree_bound`; unitality is checked on every monomial within bound.
    """
    pres = j.pres
    ring = pres.ring
    mons = [m for m in ring.monomials_up_to(degree_bound, include_one=False)]
    for m in ring.monomials_up_to(degree_bound):
        if j.pair(m, ring.one_monomial) != (ONE if m.is_one() else ZERO):
            return CocycleIdentityReport(False, degree_bound, 0, ("unitality", m))
        if j.pair(ring.one_monomial, m) != (ONE if m.is_one() else ZERO):
            return CocycleIdentityReport(False, degree_bound, 0, ("unitality", m))

    checked = 0
    for a in mons:
        da = pres.coproduct_monomial(a)
        for b in mons:
            if a.degree() + b.degree() >= degree_bound:
                continue
            db = pres.coproduct_monomial(b)
            for c in mons:
                if a.degree() + b.degree() + c.degree() > degree_bound:
                    continue
                dc = pres.coproduct_monomial(c)
                lhs = ZERO
                for (a1, a2), ca in da.terms.items():
                    for (b1, b2), cb in db.terms.items():
                        v2 = j.pair(a2, b2)
                        if v2 == 0:
                            continue
                        v1 = j.pair(a1.mul(b1), c)
                        if v1 == 0:
                            continue
                        lhs += ca * cb * v1 * v2
                rhs = ZERO
                for (b1, b2), cb in db.terms.items():
                    for (c1, c2), cc in dc.terms.items():
                        v2 = j.pair(b2, c2)
                        if v2 == 0:
                            continue
                        v1 = j.pair(a, b1.mul(c1))
                        if v1 == 0:
                            continue
                        rhs += cb * cc * v1 * v2
                checked += 1
                if lhs != rhs:
                    return CocycleIdentityReport(False, degree_bound, checked, (a, b, c))
    return CocycleIdentityReport(True, degree_bound, checked)
