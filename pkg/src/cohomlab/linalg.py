"""Exact dense linear algebra over QQ and QQ(i).

Matrices act on column vectors: an m-by-n matrix is a map K^n -> K^m.
Shapes are tracked explicitly so matrices with zero rows or columns keep
their ambient dimensions (these show up constantly as boundary maps of
complexes with missing neighbours).

Subspaces are stored as the row space of a basis in reduced row echelon
form.  RREF is a canonical representative, so subspace equality is plain
tuple comparison and every lattice operation lands back in canonical
form for free.

Two row-reduction paths share one observable contract (the unique RREF):
a division-free integer path for all-int matrices (the common case by
far) and ordinary Gauss-Jordan over the field for Fraction / Gaussian
entries.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .scalars import GaussianRational, conj, demote

__all__ = [
    "Matrix",
    "NotASubspace",
    "Subspace",
    "det",
    "image",
    "kernel",
    "mat_inverse",
    "preimage",
    "map_subspace",
    "quotient_dim",
    "rref",
]


class NotASubspace(Exception):
    """Raised when a claimed inclusion of subspaces does not hold."""


class Matrix:
    """Dense exact matrix, rows of int / Fraction / GaussianRational."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows, ncols=None):
        rows = [list(r) for r in rows]
        if rows:
            n = len(rows[0])
            for r in rows:
                if len(r) != n:
                    raise ValueError("ragged rows")
            if ncols is not None and ncols != n:
                raise ValueError("ncols disagrees with row length")
            ncols = n
        elif ncols is None:
            raise ValueError("ncols required for a matrix with no rows")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def zero(cls, m, n):
        return cls([[0] * n for _ in range(m)], n)

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    def is_zero(self):
        return all(not x for row in self.rows for x in row)

    def mul(self, other):
        """self @ other (composition: apply other first)."""
        if self.ncols != other.nrows:
            raise ValueError(
                "shape mismatch: %dx%d times %dx%d"
                % (self.nrows, self.ncols, other.nrows, other.ncols)
            )
        out = []
        orows = other.rows
        for arow in self.rows:
            acc = [0] * other.ncols
            for k, a in enumerate(arow):
                if not a:
                    continue
                brow = orows[k]
                for j, b in enumerate(brow):
                    if b:
                        acc[j] = acc[j] + a * b
            out.append(acc)
        return Matrix(out, other.ncols)

    def apply(self, vec):
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        out = []
        for row in self.rows:
            s = 0
            for a, x in zip(row, vec):
                if a and x:
                    s = s + a * x
            out.append(s)
        return out

    def add(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch in add")
        return Matrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
            self.ncols,
        )

    def scale(self, c):
        return Matrix([[c * a for a in row] for row in self.rows], self.ncols)

    def transpose(self):
        return Matrix(
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            self.nrows,
        )

    def conjugate(self):
        return Matrix([[conj(a) for a in row] for row in self.rows], self.ncols)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.nrows == other.nrows
            and self.ncols == other.ncols
            and all(
                a == b
                for r1, r2 in zip(self.rows, other.rows)
                for a, b in zip(r1, r2)
            )
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols))

    def __repr__(self):
        return "Matrix(%d x %d)" % (self.nrows, self.ncols)


def hstack(a, b):
    if a.nrows != b.nrows:
        raise ValueError("hstack: row count mismatch")
    return Matrix(
        [list(r1) + list(r2) for r1, r2 in zip(a.rows, b.rows)], a.ncols + b.ncols
    )


def vstack(a, b):
    if a.ncols != b.ncols:
        raise ValueError("vstack: column count mismatch")
    return Matrix([list(r) for r in a.rows] + [list(r) for r in b.rows], a.ncols)


# ---------------------------------------------------------------------------
# row reduction


def _row_gcd_reduce(row):
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            return row
    if g > 1:
        return [x // g for x in row]
    return row


def _rref_int(rows, ncols):
    """Division-free Gauss-Jordan on integer rows.

    Eliminates with p*row_i - a*row_pivot and re-reduces each row by its
    gcd, so entries stay small; pivots are divided out only once at the
    end.  Returns (rows, pivot_columns) with rows in canonical RREF.
    """
    rows = [list(r) for r in rows]
    m = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        # smallest nonzero magnitude makes the cross-multiplies cheap
        best = -1
        best_abs = None
        for i in range(r, m):
            v = rows[i][c]
            if v:
                a = -v if v < 0 else v
                if best_abs is None or a < best_abs:
                    best, best_abs = i, a
                    if a == 1:
                        break
        if best < 0:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        prow = rows[r]
        p = prow[c]
        for i in range(m):
            if i == r:
                continue
            a = rows[i][c]
            if a:
                ri = rows[i]
                rows[i] = _row_gcd_reduce(
                    [p * x - a * y for x, y in zip(ri, prow)]
                )
        pivots.append(c)
        r += 1
    out = []
    for i, c in enumerate(pivots):
        row = rows[i]
        p = row[c]
        new = []
        for x in row:
            f = Fraction(x, p)
            new.append(f.numerator if f.denominator == 1 else f)
        out.append(new)
    return out, pivots


def _rref_field(rows, ncols):
    """Plain exact Gauss-Jordan for Fraction / GaussianRational entries."""
    rows = [list(r) for r in rows]
    m = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if rows[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        if p != 1:
            if isinstance(p, int):
                p = Fraction(p)  # int / int would be float division
            rows[r] = [x / p for x in rows[r]]
        prow = rows[r]
        for i in range(m):
            if i == r:
                continue
            a = rows[i][c]
            if a:
                rows[i] = [x - a * y for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    out = [[demote(x) for x in rows[i]] for i in range(len(pivots))]
    return out, pivots


def _rref_rows(rows, ncols):
    for row in rows:
        for x in row:
            if type(x) is not int:
                return _rref_field(rows, ncols)
    return _rref_int(rows, ncols)


def rref(m):
    """Reduced row echelon form.  Returns (Matrix, rank).

    The result is the canonical RREF: pivots are 1, pivot columns are
    strictly increasing and cleared above and below, zero rows dropped.
    """
    rows, pivots = _rref_rows(m.rows, m.ncols)
    return Matrix(rows, m.ncols), len(pivots)


def _rref_with_pivots(m):
    rows, pivots = _rref_rows(m.rows, m.ncols)
    return rows, pivots


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """A subspace of K^n as the row space of a canonical RREF basis.

    Equality is literal equality of the reduced bases, which is sound
    because RREF is a unique representative of the row space.
    """

    __slots__ = ("n", "rows", "pivots")

    def __init__(self, spanning_rows, n):
        rows, pivots = _rref_rows(list(spanning_rows), n)
        self.n = n
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)

    @classmethod
    def _trusted(cls, rows, pivots, n):
        # caller guarantees rows are already canonical RREF
        self = cls.__new__(cls)
        self.n = n
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)
        return self

    @classmethod
    def zero(cls, n):
        return cls._trusted((), (), n)

    @classmethod
    def full(cls, n):
        rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        return cls._trusted(rows, range(n), n)

    @property
    def dim(self):
        return len(self.rows)

    def is_zero(self):
        return not self.rows

    def is_full(self):
        return len(self.rows) == self.n

    def basis_matrix(self):
        return Matrix([list(r) for r in self.rows], self.n)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return "Subspace(dim %d of K^%d)" % (self.dim, self.n)

    def contains_vector(self, vec):
        if len(vec) != self.n:
            raise ValueError("ambient dimension mismatch")
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            a = v[p]
            if a:
                v = [x - a * y for x, y in zip(v, row)]
        return not any(v)

    def contains(self, other):
        """other <= self as subspaces."""
        if self.n != other.n:
            raise ValueError("ambient dimension mismatch")
        if other.dim > self.dim:
            return False
        return all(self.contains_vector(r) for r in other.rows)

    def sum(self, other):
        if self.n != other.n:
            raise ValueError("ambient dimension mismatch")
        if not self.rows:
            return other
        if not other.rows:
            return self
        return Subspace(list(self.rows) + list(other.rows), self.n)

    def intersect(self, other):
        """Zassenhaus: reduce [U|U; V|0], read the rows with zero left half."""
        if self.n != other.n:
            raise ValueError("ambient dimension mismatch")
        if not self.rows or not other.rows:
            return Subspace.zero(self.n)
        n = self.n
        aug = [list(r) + list(r) for r in self.rows]
        aug += [list(r) + [0] * n for r in other.rows]
        rows, pivots = _rref_rows(aug, 2 * n)
        inter_rows = []
        inter_pivots = []
        for row, p in zip(rows, pivots):
            if p >= n:
                inter_rows.append(row[n:])
                inter_pivots.append(p - n)
        # rows with pivot in the right half have zero left half, and their
        # right halves are already mutually reduced: canonical as they are
        return Subspace._trusted(inter_rows, inter_pivots, n)


def quotient_dim(z, b):
    """dim(z/b); raises NotASubspace unless b really sits inside z."""
    if not z.contains(b):
        raise NotASubspace(
            "quotient denominator (dim %d) is not contained in the numerator"
            " (dim %d) in K^%d" % (b.dim, z.dim, z.n)
        )
    return z.dim - b.dim


def kernel(m):
    """Null space of m as a subspace of K^ncols."""
    rows, pivots = _rref_with_pivots(m)
    n = m.ncols
    pivset = set(pivots)
    basis = []
    for free in range(n):
        if free in pivset:
            continue
        v = [0] * n
        v[free] = 1
        for i, p in enumerate(pivots):
            x = rows[i][free]
            if x:
                v[p] = -x
        basis.append(v)
    # not echelon as built (pivot columns can precede the free column), so
    # canonicalize through the ordinary constructor
    return Subspace(basis, n)


def image(m):
    """Column space of m as a subspace of K^nrows."""
    return Subspace([list(r) for r in m.transpose().rows], m.nrows)


def map_subspace(m, s):
    """Image of the subspace s under the matrix m."""
    if m.ncols != s.n:
        raise ValueError("ambient dimension mismatch")
    cols = m.mul(s.basis_matrix().transpose())
    return image(cols)


def annihilator(s):
    """Rows w with <w, v> = 0 for every v in s, as a Subspace of K^n."""
    return kernel(s.basis_matrix())


def preimage(m, w):
    """{x : m x in w} as a subspace of the source K^ncols.

    Uses the annihilator trick: with C the annihilator basis of w,
    m x in w iff C (m x) = 0, so the preimage is ker(C m).
    """
    if m.nrows != w.n:
        raise ValueError("ambient dimension mismatch")
    if w.is_full():
        return Subspace.full(m.ncols)
    c = annihilator(w).basis_matrix()
    return kernel(c.mul(m))


def mat_inverse(m):
    """Exact inverse of a square matrix; raises ValueError if singular."""
    if m.nrows != m.ncols:
        raise ValueError("not square")
    n = m.nrows
    aug = hstack(m, Matrix.identity(n))
    rows, pivots = _rref_rows(aug.rows, 2 * n)
    if list(pivots) != list(range(n)):
        raise ValueError("matrix is singular")
    return Matrix([row[n:] for row in rows], n)


def det(m):
    """Exact determinant by Gaussian elimination, any scalar kind."""
    if m.nrows != m.ncols:
        raise ValueError("not square")
    n = m.nrows
    if n == 0:
        return 1
    rows = [list(r) for r in m.rows]
    sign = 1
    result = 1
    for c in range(n):
        piv = None
        for r in range(c, n):
            if rows[r][c]:
                piv = r
                break
        if piv is None:
            return 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            sign = -sign
        p = rows[c][c]
        result = result * p
        pf = Fraction(p) if isinstance(p, int) else p
        for r in range(c + 1, n):
            a = rows[r][c]
            if a:
                f = a / pf
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
    return demote(sign * result)
