"""Cohomology of Lie algebras with extra structure.

Three constructions feed the complex machinery:

  * ce_complex: the exterior algebra of the dual with the differential
    dual to the bracket (a GradedComplex).  d d = 0 on generators is
    exactly the Jacobi identity, so it is checked and violations are
    reported by generator.

  * complex_bicomplex: a complex structure is given by the images
    d phi^i of a (1,0)-coframe phi^1..phi^n; the conjugate coframe gets
    the conjugated images, the differential splits by target bidegree
    into d1 = (1,0)-part and d2 = (0,1)-part, and the result is a
    bounded double complex over Q(i).  Integrability means no
    (0,2)-component shows up.

  * symplectic_pair: a closed nondegenerate 2-form omega produces the
    operator calculus on forms: L = omega ^ . , the dual Lambda, the
    symplectic star, H = (m-k) id on degree k (n = 2m), and the second
    differential d_lam = d Lambda - Lambda d of degree -1.  The pair
    (d, d_lam) is a bidifferential pair with degrees (+1, -1).

    Lambda is computed twice, through the pairing Gram matrices and as
    star L star, and the two must agree; the star must square to the
    identity (this pins the volume normalization omega^m / m!), and
    [Lambda, L] = H pins all the sign conventions.  Any mismatch raises,
    so a constructed pair is a certificate that the calculus holds.
"""

from __future__ import annotations

import math
import random
import warnings
from fractions import Fraction

from .linalg import (
    Matrix,
    Subspace,
    det,
    image,
    kernel,
    map_subspace,
    mat_inverse,
    quotient_dim,
)
from .scalars import conj, demote
from .exterior import (
    basis_positions,
    derivation_matrix,
    extend_derivation,
    form_add,
    form_scale,
    merge_sign,
    multi_indices,
    wedge,
    wedge_power,
)
from .complexes import BidiffPair, DoubleComplex, GradedComplex, require_valid
from .cohomology import Analysis, PairAnalysis, Subquotient, induced_map_rank

__all__ = [
    "ComplexStructureData",
    "LieAlgebraPresentation",
    "Sl2Operators",
    "SymplecticData",
    "builtin",
    "ce_complex",
    "complex_bicomplex",
    "hard_lefschetz",
    "primitive_and_lefschetz_decomposition",
    "random_nilpotent_lie",
    "random_symplectic",
    "symplectic_pair",
    "type_n_view",
]


class LieAlgebraPresentation:
    """n generators e_1 .. e_n with brackets {(i, j): {k: c}} for i < j,
    meaning [e_i, e_j] = sum_k c e_k (1-based indices throughout)."""

    def __init__(self, n, brackets):
        if not isinstance(n, int) or n < 0:
            raise ValueError("generator count must be a nonnegative int")
        self.n = n
        self.brackets = {}
        for (i, j), targets in brackets.items():
            if not (1 <= i < j <= n):
                raise ValueError("bracket indices must satisfy 1 <= i < j <= n, got (%r, %r)" % (i, j))
            cleaned = {}
            for k, c in targets.items():
                if not (1 <= k <= n):
                    raise ValueError("bracket target e%r out of range" % (k,))
                if c:
                    cleaned[k] = c
            if cleaned:
                self.brackets[(i, j)] = cleaned

    def dgen(self):
        """Dual differential on generators, 0-based: de^k = -sum c^k_ij e^i e^j."""
        out = {}
        for (i, j), targets in self.brackets.items():
            for k, c in targets.items():
                out.setdefault(k - 1, {})[(i - 1, j - 1)] = -c
        return out

    def bracket_coords(self, i, y):
        """[e_i, y] for a coordinate vector y, as a coordinate vector."""
        out = [0] * self.n
        for j in range(1, self.n + 1):
            c = y[j - 1]
            if not c or j == i:
                continue
            pair = (i, j) if i < j else (j, i)
            sign = 1 if i < j else -1
            for k, ck in self.brackets.get(pair, {}).items():
                out[k - 1] += sign * c * ck
        return out

    def is_nilpotent(self):
        """Lower central series reaches zero."""
        current = Subspace.full(self.n)
        while True:
            vecs = []
            for i in range(1, self.n + 1):
                for row in current.rows:
                    v = self.bracket_coords(i, row)
                    if any(v):
                        vecs.append(v)
            nxt = Subspace(vecs, self.n)
            if nxt.dim == 0:
                return True
            if nxt.dim == current.dim:
                return False
            current = nxt

    def is_unimodular(self):
        """tr(ad x) = 0 for every x; guarantees Poincare duality."""
        for i in range(1, self.n + 1):
            tr = 0
            for j in range(1, self.n + 1):
                if j == i:
                    continue
                pair = (i, j) if i < j else (j, i)
                sign = 1 if i < j else -1
                tr += sign * self.brackets.get(pair, {}).get(j, 0)
            if tr:
                return False
        return True


def _jacobi_check(n, dgen):
    d = extend_derivation(n, dgen)
    for g in sorted(dgen):
        if d(dgen[g]):
            raise ValueError(
                "Jacobi identity fails: d(d e%d) != 0" % (g + 1)
            )


def ce_complex(lie):
    """Exterior-algebra complex of the dual, degrees 0..n."""
    dgen = lie.dgen()
    _jacobi_check(lie.n, dgen)
    if not lie.is_nilpotent():
        warnings.warn(
            "Lie algebra is not nilpotent; cohomology is still computed, "
            "but the usual comparison theorems need not apply",
            stacklevel=2,
        )
    n = lie.n
    dims = {k: math.comb(n, k) for k in range(n + 1)}
    d = {k: derivation_matrix(n, dgen, k) for k in range(n)}
    g = GradedComplex(dims, d)
    bad = g.validate()
    if bad:
        raise AssertionError("constructed complex invalid: " + "; ".join(bad))
    return g


# ---------------------------------------------------------------------------
# complex structures


class ComplexStructureData:
    """A (1,0)-coframe phi^1..phi^n given by the forms d phi^i.

    Generator indexing for the forms: 0..n-1 are phi^1..phi^n and
    n..2n-1 are the conjugates.  dphi maps 1-based i to a 2-form dict;
    the conjugate differentials are derived, never supplied.
    """

    def __init__(self, n, dphi):
        self.n = n
        self.dphi = {}
        for i, form in dphi.items():
            if not (1 <= i <= n):
                raise ValueError("d phi^%r out of range" % (i,))
            for mono in form:
                if len(mono) != 2 or not (0 <= mono[0] < mono[1] < 2 * n):
                    raise ValueError("d phi^%d has a non-2-form monomial %r" % (i, mono))
            self.dphi[i] = {m: c for m, c in form.items() if c}


def _conj_form(form, n):
    """Swap phi and conjugate-phi blocks and conjugate all coefficients."""
    out = {}
    for mono, c in form.items():
        mapped = [x + n if x < n else x - n for x in mono]
        sign = 1
        # insertion sort, counting transpositions of the 2..3 entries
        for a in range(1, len(mapped)):
            b = a
            while b > 0 and mapped[b - 1] > mapped[b]:
                mapped[b - 1], mapped[b] = mapped[b], mapped[b - 1]
                sign = -sign
                b -= 1
        out[tuple(mapped)] = sign * conj(c)
    return out


def _bidegree(mono, n):
    p = sum(1 for x in mono if x < n)
    return (p, len(mono) - p)


def _pq_basis(n, p, q):
    """Monomials of bidegree (p, q), lex in (holomorphic, conjugate) parts."""
    out = []
    for a in multi_indices(n, p):
        for b in multi_indices(n, q):
            out.append(a + tuple(x + n for x in b))
    return out


def complex_bicomplex(csd):
    """Bounded double complex of a complex structure, over Q(i)."""
    n = csd.n
    dgen = {}
    for i in range(1, n + 1):
        form = csd.dphi.get(i, {})
        for mono in form:
            if _bidegree(mono, n) == (0, 2):
                raise ValueError(
                    "complex structure is not integrable: "
                    "d phi^%d has a (0,2)-component" % i
                )
        dgen[i - 1] = form
        dgen[n + i - 1] = _conj_form(form, n)
    _jacobi_check(2 * n, dgen)
    d = extend_derivation(2 * n, dgen)

    spaces = {}
    basis = {}
    pos = {}
    for p in range(n + 1):
        for q in range(n + 1):
            b = _pq_basis(n, p, q)
            spaces[(p, q)] = len(b)
            basis[(p, q)] = b
            pos[(p, q)] = {m: i for i, m in enumerate(b)}
    d1 = {}
    d2 = {}
    for (p, q), src in basis.items():
        tgt1 = pos.get((p + 1, q))
        tgt2 = pos.get((p, q + 1))
        rows1 = [[0] * len(src) for _ in range(spaces.get((p + 1, q), 0))]
        rows2 = [[0] * len(src) for _ in range(spaces.get((p, q + 1), 0))]
        any1 = any2 = False
        for col, mono in enumerate(src):
            for m, c in d({mono: 1}).items():
                bd = _bidegree(m, n)
                if bd == (p + 1, q):
                    rows1[tgt1[m]][col] = c
                    any1 = True
                elif bd == (p, q + 1):
                    rows2[tgt2[m]][col] = c
                    any2 = True
                else:
                    raise AssertionError(
                        "differential produced bidegree %r from %r" % (bd, (p, q))
                    )
        if any1:
            d1[(p, q)] = Matrix(rows1, len(src))
        if any2:
            d2[(p, q)] = Matrix(rows2, len(src))
    dc = DoubleComplex(spaces, d1, d2)
    require_valid(dc)
    return dc


# ---------------------------------------------------------------------------
# symplectic structures


class SymplecticData:
    """A Lie algebra with a 2-form {(i, j): c} (1-based, i < j)."""

    def __init__(self, lie, omega):
        self.lie = lie
        self.omega = {}
        for (i, j), c in omega.items():
            if not (1 <= i < j <= lie.n):
                raise ValueError("omega indices must satisfy 1 <= i < j <= n")
            if c:
                self.omega[(i, j)] = c

    def omega_form(self):
        return {(i - 1, j - 1): c for (i, j), c in self.omega.items()}

    def omega_matrix(self):
        n = self.lie.n
        rows = [[0] * n for _ in range(n)]
        for (i, j), c in self.omega.items():
            rows[i - 1][j - 1] = c
            rows[j - 1][i - 1] = -c
        return Matrix(rows, n)


class Sl2Operators:
    """Per-degree matrices of the symplectic calculus, plus metadata.

    star[k]: Lambda^k -> Lambda^{n-k};  L[k]: Lambda^k -> Lambda^{k+2};
    Lam[k]: Lambda^k -> Lambda^{k-2};  d[k] and d_lam[k] are the two
    differentials; H acts on Lambda^k as (m - k) id.  unimodular records
    whether the underlying algebra has Poincare duality.
    """

    __slots__ = ("n", "m", "v0", "star", "L", "Lam", "d", "d_lam", "unimodular")

    def __init__(self, n, m, v0, star, L, Lam, d, d_lam, unimodular):
        self.n = n
        self.m = m
        self.v0 = v0
        self.star = star
        self.L = L
        self.Lam = Lam
        self.d = d
        self.d_lam = d_lam
        self.unimodular = unimodular

    def h_scalar(self, k):
        return self.m - k


def _dim(n, k):
    return math.comb(n, k) if 0 <= k <= n else 0


def _get(table, n, k, shift):
    """table[k] or a zero matrix Lambda^k -> Lambda^{k+shift}."""
    m = table.get(k)
    if m is None:
        return Matrix.zero(_dim(n, k + shift), _dim(n, k))
    return m


def symplectic_pair(sd):
    """(BidiffPair, Sl2Operators) for a closed nondegenerate 2-form.

    Every structural identity of the calculus is asserted during
    construction; returning at all certifies them.
    """
    lie = sd.lie
    n = lie.n
    if n % 2:
        raise ValueError("symplectic structure needs even dimension")
    m = n // 2
    dgen = lie.dgen()
    _jacobi_check(n, dgen)
    if not lie.is_nilpotent():
        warnings.warn("Lie algebra is not nilpotent", stacklevel=2)
    omega = sd.omega_form()
    if extend_derivation(n, dgen)(omega):
        raise ValueError("omega is not closed")
    om = sd.omega_matrix()
    if det(om) == 0:
        raise ValueError("omega is degenerate")
    # Pairing on covectors used by the Gram matrices and the star.  Its
    # overall sign is a convention: this orientation makes the star
    # relation below read d_lam = (-1)^(k+1) star d star while keeping
    # [Lambda, L] = H; the opposite orientation flips star by (-1)^k
    # per degree and nothing else (Lambda and both differentials are
    # unaffected either way).
    p_mat = mat_inverse(om)
    prow = p_mat.rows

    d = {k: derivation_matrix(n, dgen, k) for k in range(n + 1)}

    # volume normalization: v = omega^m / m!, v0 its top coefficient
    top = tuple(range(n))
    v0 = demote(Fraction(wedge_power(omega, m).get(top, 0), math.factorial(m)))
    if v0 == 0:
        raise AssertionError("volume form vanished for a nondegenerate omega")

    def minor_det(a, b):
        return det(Matrix([[prow[i][j] for j in b] for i in a], len(b)))

    gram = {}
    star = {}
    L = {}
    for k in range(n + 1):
        idx = multi_indices(n, k)
        co = len(idx)
        gram[k] = Matrix([[minor_det(a, b) for b in idx] for a in idx], co)
        srows = [[0] * co for _ in range(_dim(n, n - k))]
        cpos = basis_positions(n, n - k)
        full = set(range(n))
        for j, b in enumerate(idx):
            for a in idx:
                da = minor_det(a, b)
                if not da:
                    continue
                acomp = tuple(sorted(full - set(a)))
                sgn, _ = merge_sign(a, acomp)
                srows[cpos[acomp]][j] = demote(sgn * da * v0)
        star[k] = Matrix(srows, co)
        lrows = [[0] * co for _ in range(_dim(n, k + 2))]
        if k + 2 <= n:
            lpos = basis_positions(n, k + 2)
            for j, b in enumerate(idx):
                for mtup, c in wedge(omega, {b: 1}).items():
                    lrows[lpos[mtup]][j] = c
        L[k] = Matrix(lrows, co)

    lam = {}
    for k in range(n + 1):
        if k < 2:
            lam[k] = Matrix.zero(0, _dim(n, k))
            continue
        lam[k] = mat_inverse(gram[k - 2].transpose()).mul(
            L[k - 2].transpose()
        ).mul(gram[k].transpose())
        via_star = star[n - k + 2].mul(L[n - k]).mul(star[k])
        if lam[k] != via_star:
            raise AssertionError(
                "two computations of Lambda disagree in degree %d" % k
            )

    for k in range(n + 1):
        co = _dim(n, k)
        if star[n - k].mul(star[k]) != Matrix.identity(co):
            raise AssertionError("star star != id in degree %d" % k)
        commutator = _get(lam, n, k + 2, -2).mul(L[k]).add(
            _get(L, n, k - 2, 2).mul(lam[k]).scale(-1)
        )
        if commutator != Matrix.identity(co).scale(m - k):
            raise AssertionError("[Lambda, L] != (m - k) id in degree %d" % k)

    d_lam = {}
    for k in range(n + 1):
        d_lam[k] = _get(d, n, k - 2, 1).mul(lam[k]).add(
            _get(lam, n, k + 1, -2).mul(d[k]).scale(-1)
        )
        if k == 0:
            # the comparison route passes through Lambda^{n+1} = 0
            if not d_lam[k].is_zero():
                raise AssertionError("d_lam nonzero on degree 0")
            continue
        sgn = -1 if k % 2 == 0 else 1  # (-1)^(k+1)
        via_star = star[n - k + 1].mul(d[n - k]).mul(star[k]).scale(sgn)
        if d_lam[k] != via_star:
            raise AssertionError(
                "d_lam != (-1)^(k+1) star d star in degree %d" % k
            )
    for k in range(n + 1):
        anti = _get(d, n, k - 1, 1).mul(d_lam[k]).add(
            _get(d_lam, n, k + 1, -1).mul(d[k])
        )
        if not anti.is_zero():
            raise AssertionError("d d_lam + d_lam d != 0 in degree %d" % k)
        sq = _get(d_lam, n, k - 1, -1).mul(d_lam[k])
        if not sq.is_zero():
            raise AssertionError("d_lam d_lam != 0 in degree %d" % k)

    dims = {k: _dim(n, k) for k in range(n + 1)}
    d1 = {k: mat for k, mat in d.items() if not mat.is_zero() and mat.nrows}
    d2 = {k: mat for k, mat in d_lam.items() if not mat.is_zero() and mat.nrows}
    pair = BidiffPair(dims, 1, -1, d1, d2)
    require_valid(pair)
    ops = Sl2Operators(n, m, v0, star, L, lam, d, d_lam, lie.is_unimodular())
    return pair, ops


def _de_rham_subquotients(ops):
    """{k: Subquotient} for the d-cohomology on Lambda^k."""
    n = ops.n
    out = {}
    for k in range(n + 1):
        z = kernel(ops.d[k])
        b = image(_get(ops.d, n, k - 1, 1))
        out[k] = Subquotient(("H_d", k), z, b)
    return out


def hard_lefschetz(pair, ops):
    """Lefschetz maps on d-cohomology plus the flavor-dimension slack.

    lefschetz_iso[k] says whether L^k: H^{m-k} -> H^{m+k} is bijective;
    the slack table is BC^j + A^j - 2 b_j (always >= 0).  For a
    unimodular algebra, total slack zero is equivalent to all Lefschetz
    maps being bijective, and that equivalence is asserted.
    """
    n, m = ops.n, ops.m
    hq = _de_rham_subquotients(ops)
    iso = {}
    for k in range(m + 1):
        mat = Matrix.identity(_dim(n, m - k))
        for j in range(k):
            mat = ops.L[m - k + 2 * j].mul(mat)
        res = induced_map_rank(mat, hq[m - k], hq[m + k])
        iso[k] = res.injective and res.surjective
    holds = all(iso.values())

    pa = PairAnalysis(pair, validated=True)
    bc = pa.flavor_table("BC", keep_zeros=True)
    aa = pa.flavor_table("A", keep_zeros=True)
    betti = {k: hq[k].dim for k in range(n + 1)}
    slack = {}
    for k in range(n + 1):
        s = bc.get(k, 0) + aa.get(k, 0) - 2 * betti[k]
        if s < 0:
            raise AssertionError("flavor slack negative in degree %d" % k)
        slack[k] = s
    if ops.unimodular and (sum(slack.values()) == 0) != holds:
        raise AssertionError(
            "slack criterion and Lefschetz maps disagree on a unimodular algebra"
        )
    return {
        "lefschetz_iso": iso,
        "holds": holds,
        "slack": slack,
        "betti": betti,
    }


def primitive_and_lefschetz_decomposition(pair, ops):
    """Primitive cohomology and the Lefschetz decomposition test.

    primitive[k] = dim of (ker d n ker d_lam n ker Lambda)^k modulo
    d((ker d_lam n ker Lambda)^{k-1}).  The decomposition check asks,
    degree by degree, whether the images of L^r on the d- and
    Lambda-closed forms span H^j directly and exhaust it.
    """
    n, m = ops.n, ops.m
    ker_d = {k: kernel(ops.d[k]) for k in range(n + 1)}
    ker_dlam = {k: kernel(ops.d_lam[k]) for k in range(n + 1)}
    ker_lam = {k: kernel(ops.Lam[k]) for k in range(n + 1)}

    primitive = {}
    for k in range(n + 1):
        znum = ker_d[k].intersect(ker_dlam[k]).intersect(ker_lam[k])
        if k == 0:
            bden = Subspace.zero(_dim(n, 0))
        else:
            bden = map_subspace(
                ops.d[k - 1], ker_dlam[k - 1].intersect(ker_lam[k - 1])
            )
        primitive[k] = quotient_dim(znum, bden)

    per_degree = {}
    for j in range(n + 1):
        b = image(_get(ops.d, n, j - 1, 1))
        bj = quotient_dim(ker_d[j], b)
        parts = []
        for r in range(0, j // 2 + 1):
            s = j - 2 * r
            if s > n:
                continue
            sub = ker_d[s].intersect(ker_lam[s])
            mat = Matrix.identity(_dim(n, s))
            for t in range(r):
                mat = ops.L[s + 2 * t].mul(mat)
            parts.append(map_subspace(mat, sub).sum(b))
        total = b
        indep_sum = 0
        for u in parts:
            total = total.sum(u)
            indep_sum += u.dim - b.dim
        per_degree[j] = (total.dim - b.dim == indep_sum) and (indep_sum == bj)
    return {
        "primitive": primitive,
        "per_degree": per_degree,
        "decomposition_holds": all(per_degree.values()),
    }


# ---------------------------------------------------------------------------
# bigraded summaries


def type_n_view(dc_or_analysis):
    """Antidiagonal-transverse sums: {flavor: {p - q: total dim}}.

    The per-slice inequality sum BC + sum A >= sum D1 + sum D2 follows
    from the cellwise one; it is asserted here as an engine guard.
    """
    a = dc_or_analysis
    if isinstance(a, DoubleComplex):
        a = Analysis(a)
    out = {}
    for name in ("D1", "D2", "BC", "A"):
        t = {}
        for (p, q), v in a.flavor_table(name).items():
            t[p - q] = t.get(p - q, 0) + v
        out[name] = {k: v for k, v in sorted(t.items()) if v}
    for k in {k for t in out.values() for k in t}:
        lhs = out["BC"].get(k, 0) + out["A"].get(k, 0)
        rhs = out["D1"].get(k, 0) + out["D2"].get(k, 0)
        if lhs < rhs:
            raise AssertionError(
                "transverse-slice inequality violated at %d (%d < %d)"
                % (k, lhs, rhs)
            )
    return out


# ---------------------------------------------------------------------------
# stock examples and random generation


def iwasawa_lie():
    """Real six-dimensional nilpotent algebra underlying the Iwasawa manifold."""
    return LieAlgebraPresentation(
        6,
        {
            (1, 3): {5: 1},
            (2, 4): {5: -1},
            (1, 4): {6: 1},
            (2, 3): {6: 1},
        },
    )


def iwasawa_complex_structure():
    """d phi^3 = -phi^1 ^ phi^2, the other coframe elements closed."""
    return ComplexStructureData(3, {3: {(0, 1): -1}})


def iwasawa_symplectic():
    return SymplecticData(
        iwasawa_lie(), {(1, 6): 1, (2, 5): 1, (3, 4): 1}
    )


BUILTIN_NAMES = ("iwasawa-complex", "iwasawa-symplectic", "heisenberg3",
                 "abelian:<n>")


def builtin(name):
    """Stock inputs by name; see the CLI help for the list."""
    if name == "iwasawa-complex":
        return complex_bicomplex(iwasawa_complex_structure())
    if name == "iwasawa-symplectic":
        return symplectic_pair(iwasawa_symplectic())
    if name == "heisenberg3":
        return LieAlgebraPresentation(3, {(1, 2): {3: 1}})
    if name.startswith("abelian:"):
        try:
            k = int(name.split(":", 1)[1])
        except ValueError:
            raise ValueError("abelian:<n> needs an integer dimension")
        if k < 0:
            raise ValueError("abelian:<n> needs a nonnegative dimension")
        return LieAlgebraPresentation(k, {})
    raise ValueError(
        "unknown builtin %r (available: iwasawa-complex, iwasawa-symplectic, "
        "heisenberg3, abelian:<n>)" % (name,)
    )


def random_nilpotent_lie(n, rng):
    """Triangular construction: de^i is a closed 2-form in e^1..e^{i-1}.

    Closedness of every generator image gives d d = 0 (hence Jacobi),
    and the strictly triangular shape forces nilpotency.
    """
    dgen = {}
    for i in range(2, n):
        # closed 2-forms of the partial algebra on generators 0..i-1
        mat = derivation_matrix(i, dgen, 2)
        closed = kernel(mat)
        idx = multi_indices(i, 2)
        form = {}
        for row in closed.rows:
            if rng.random() < 0.5:
                continue
            c = rng.choice((-2, -1, 1, 2))
            form = form_add(form, {idx[t]: c * v for t, v in enumerate(row) if v})
        if form:
            dgen[i] = form
    brackets = {}
    for k, form in dgen.items():
        for (i, j), c in form.items():
            brackets.setdefault((i + 1, j + 1), {})[k + 1] = -c
    return LieAlgebraPresentation(n, brackets)


def random_symplectic(n, seed, max_tries=40):
    """Random nilpotent algebra with a random closed nondegenerate 2-form.

    Returns None when no nondegenerate closed form turns up, so callers
    can move on to the next seed (some random algebras admit none).
    """
    rng = random.Random(seed)
    lie = random_nilpotent_lie(n, rng)
    dgen = lie.dgen()
    closed = kernel(derivation_matrix(n, dgen, 2))
    if closed.dim == 0:
        return None
    idx = multi_indices(n, 2)
    for _ in range(max_tries):
        coeffs = [rng.randint(-2, 2) for _ in range(closed.dim)]
        form = {}
        for c, row in zip(coeffs, closed.rows):
            if c:
                form = form_add(form, {idx[t]: c * v for t, v in enumerate(row) if v})
        omega = {(i + 1, j + 1): c for (i, j), c in form.items()}
        if not omega:
            continue
        sd = SymplecticData(lie, omega)
        if det(sd.omega_matrix()) != 0:
            return sd
    return None
