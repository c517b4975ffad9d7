from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cohomlab.linalg import (
    Matrix,
    NotASubspace,
    Subspace,
    annihilator,
    hstack,
    image,
    kernel,
    map_subspace,
    mat_inverse,
    preimage,
    quotient_dim,
    rref,
)
from cohomlab.scalars import GaussianRational


def M(rows, ncols=None):
    return Matrix(rows, ncols)


# -- strategies -------------------------------------------------------------

ints = st.integers(-6, 6)
fracs = st.fractions(min_value=-8, max_value=8, max_denominator=5)
gausses = st.builds(GaussianRational, st.integers(-3, 3), st.integers(-3, 3))
entry_kinds = [ints, fracs, st.one_of(ints, gausses)]


@st.composite
def matrices(draw, max_dim=5):
    m = draw(st.integers(0, max_dim))
    n = draw(st.integers(0, max_dim))
    entries = draw(st.sampled_from(entry_kinds))
    rows = [[draw(entries) for _ in range(n)] for _ in range(m)]
    return Matrix(rows, n)


@st.composite
def subspace_pairs(draw, n=4):
    def sub():
        k = draw(st.integers(0, n))
        rows = [[draw(ints) for _ in range(n)] for _ in range(k)]
        return Subspace(rows, n)

    return sub(), sub()


# -- rref -------------------------------------------------------------------


def test_rref_identity():
    r, rank = rref(Matrix.identity(2))
    assert r == Matrix.identity(2)
    assert rank == 2


def test_rref_dependent_rows():
    r, rank = rref(M([[1, 2], [2, 4]]))
    assert r == M([[1, 2]])
    assert rank == 1


def test_rref_permutation():
    r, rank = rref(M([[0, 1], [1, 0]]))
    assert r == Matrix.identity(2)
    assert rank == 2


def test_rref_produces_fractions_when_needed():
    r, rank = rref(M([[2, 3], [0, 0]]))
    assert rank == 1
    assert r == M([[1, Fraction(3, 2)]])


def test_rref_gaussian_entries():
    i = GaussianRational(0, 1)
    r, rank = rref(M([[i, 1], [1, -i]]))
    # second row is -i times the first
    assert rank == 1
    assert r == M([[1, -i]])


def test_rref_empty_shapes():
    r, rank = rref(Matrix([], 3))
    assert (r.nrows, r.ncols, rank) == (0, 3, 0)
    r, rank = rref(Matrix([[], []], 0))
    assert (r.nrows, r.ncols, rank) == (0, 0, 0)


@given(matrices())
@settings(max_examples=200)
def test_rref_round_trip_and_canonical_shape(m):
    r, rank = rref(m)
    r2, rank2 = rref(r)
    assert r2 == r and rank2 == rank
    # canonical RREF: pivots are 1, strictly increasing, columns cleared
    pivots = []
    for row in r.rows:
        nz = [j for j, x in enumerate(row) if x]
        assert nz, "zero rows must be dropped"
        p = nz[0]
        assert row[p] == 1
        pivots.append(p)
    assert pivots == sorted(set(pivots))
    for i, p in enumerate(pivots):
        for i2 in range(r.nrows):
            if i2 != i:
                assert not r.rows[i2][p]


@given(matrices())
@settings(max_examples=200)
def test_rank_nullity(m):
    assert kernel(m).dim + image(m).dim == m.ncols


# -- kernel / image ---------------------------------------------------------


def test_kernel_image_zero_and_identity():
    z = Matrix.zero(3, 3)
    assert kernel(z).dim == 3 and image(z).dim == 0
    e = Matrix.identity(4)
    assert kernel(e).dim == 0 and image(e).dim == 4


def test_kernel_of_row_vector():
    k = kernel(M([[1, 1]]))
    assert k.dim == 1
    assert k.rows == ((1, -1),)


def test_kernel_lies_in_domain_image_in_codomain():
    m = M([[1, 0, 2], [0, 0, 0]])
    assert kernel(m).n == 3
    assert image(m).n == 2


@given(matrices())
@settings(max_examples=100)
def test_kernel_vectors_killed(m):
    k = kernel(m)
    for v in k.rows:
        assert not any(m.apply(list(v)))


# -- subspace lattice -------------------------------------------------------


def test_sum_and_intersection_of_axes():
    u = Subspace([[1, 0]], 2)
    v = Subspace([[0, 1]], 2)
    assert u.sum(v) == Subspace.full(2)
    assert u.intersect(v) == Subspace.zero(2)


def test_idempotence():
    u = Subspace([[1, 2, 3], [0, 1, 1]], 3)
    assert u.sum(u) == u
    assert u.intersect(u) == u


def test_intersection_with_containing_space():
    u = Subspace([[1, 1, 0]], 3)
    v = Subspace([[1, 1, 0], [0, 0, 1]], 3)
    assert u.intersect(v) == u


@given(subspace_pairs())
@settings(max_examples=200)
def test_dimension_formula_and_commutativity(pair):
    u, v = pair
    s = u.sum(v)
    i = u.intersect(v)
    assert u.dim + v.dim == s.dim + i.dim
    assert s == v.sum(u)
    assert i == v.intersect(u)
    assert s.contains(u) and s.contains(v)
    assert u.contains(i) and v.contains(i)


@given(subspace_pairs(), subspace_pairs())
@settings(max_examples=100)
def test_associativity(p1, p2):
    u, v = p1
    w, _ = p2
    assert u.sum(v).sum(w) == u.sum(v.sum(w))
    assert u.intersect(v).intersect(w) == u.intersect(v.intersect(w))


@given(subspace_pairs())
@settings(max_examples=200)
def test_equality_agrees_with_mutual_contains(pair):
    u, v = pair
    assert (u == v) == (u.contains(v) and v.contains(u))


def test_contains_vector():
    u = Subspace([[1, 0, 1], [0, 1, 1]], 3)
    assert u.contains_vector([1, 1, 2])
    assert not u.contains_vector([0, 0, 1])
    assert u.contains_vector([0, 0, 0])


# -- quotients --------------------------------------------------------------


def test_quotient_dims():
    full = Subspace.full(2)
    zero = Subspace.zero(2)
    assert quotient_dim(full, zero) == 2
    u = Subspace([[1, 3]], 2)
    assert quotient_dim(u, u) == 0
    assert quotient_dim(full, Subspace([[1, 1]], 2)) == 1


def test_quotient_raises_not_a_subspace():
    z = Subspace([[1, 0]], 2)
    b = Subspace([[0, 1]], 2)
    with pytest.raises(NotASubspace):
        quotient_dim(z, b)


# -- maps on subspaces ------------------------------------------------------


def test_map_subspace():
    m = M([[1, 0], [0, 0]])
    s = Subspace.full(2)
    assert map_subspace(m, s) == Subspace([[1, 0]], 2)


def test_preimage_examples():
    m = M([[1, 0], [0, 1]])
    w = Subspace([[1, 0]], 2)
    assert preimage(m, w) == w
    # collapse map: preimage of 0 is the kernel
    m2 = M([[1, 1]])
    assert preimage(m2, Subspace.zero(1)) == kernel(m2)
    assert preimage(m2, Subspace.full(1)) == Subspace.full(2)


@given(matrices(), st.data())
@settings(max_examples=100)
def test_preimage_characterization(m, data):
    k = data.draw(st.integers(0, m.nrows))
    rows = [
        [data.draw(st.integers(-3, 3)) for _ in range(m.nrows)] for _ in range(k)
    ]
    w = Subspace(rows, m.nrows)
    p = preimage(m, w)
    # everything in the preimage maps into w, and the kernel sits inside
    assert w.contains(map_subspace(m, p))
    assert p.contains(kernel(m))


def test_annihilator_double_dual():
    u = Subspace([[1, 2, 0], [0, 0, 1]], 3)
    assert annihilator(annihilator(u)) == u


def test_mat_inverse():
    m = M([[2, 1], [1, 1]])
    inv = mat_inverse(m)
    assert m.mul(inv) == Matrix.identity(2)
    assert inv.mul(m) == Matrix.identity(2)
    with pytest.raises(ValueError):
        mat_inverse(M([[1, 1], [2, 2]]))


def test_matrix_shape_guards():
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        Matrix([], None)
    with pytest.raises(ValueError):
        M([[1]]).mul(M([[1, 2], [3, 4]]))
    with pytest.raises(ValueError):
        hstack(M([[1]]), M([[1], [2]]))
