"""Property tests for the exact linear algebra layer."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from eigenalg import _fpkernel
from eigenalg.exactla import (Field, GF2, Mat, QQ, Subspace, kernel, rref)

try:
    from eigenalg import _fpkernel_c
except ImportError:  # pragma: no cover - build without the extension
    _fpkernel_c = None


small_int = st.integers(min_value=-6, max_value=6)


def matrices(field):
    return st.integers(1, 4).flatmap(
        lambda r: st.integers(1, 4).flatmap(
            lambda c: st.lists(
                st.lists(small_int, min_size=c, max_size=c),
                min_size=r, max_size=r).map(
                    lambda rows: Mat.from_rows(field, rows, cols=c))))


@settings(max_examples=60, deadline=None)
@given(matrices(QQ))
def test_rref_idempotent_qq(m):
    r, piv = rref(m)
    r2, piv2 = rref(r)
    assert (r2, piv2) == (r, piv)


@settings(max_examples=60, deadline=None)
@given(matrices(Field(5)))
def test_rref_idempotent_f5(m):
    r, piv = rref(m)
    r2, piv2 = rref(r)
    assert (r2, piv2) == (r, piv)


@settings(max_examples=60, deadline=None)
@given(matrices(QQ))
def test_kernel_annihilates(m):
    ker = kernel(m)
    for v in ker.basis_vectors():
        assert all(x == 0 for x in m.apply(v))
    # rank-nullity
    assert ker.dim + len(rref(m)[1]) == m.cols


def vector_lists(dim, count):
    return st.lists(st.lists(small_int, min_size=dim, max_size=dim),
                    min_size=0, max_size=count)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(
    lambda d: st.tuples(st.just(d), vector_lists(d, 3), vector_lists(d, 3))))
def test_subspace_dimension_identity(data):
    d, va, vb = data
    A = Subspace.from_vectors(QQ, d, [[Fraction(x) for x in v] for v in va])
    B = Subspace.from_vectors(QQ, d, [[Fraction(x) for x in v] for v in vb])
    assert A.sum(B).dim + A.intersect(B).dim == A.dim + B.dim
    assert A.sum(B).contains(A) and A.sum(B).contains(B)
    assert A.contains(A.intersect(B))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-20, 20), min_size=c, max_size=c),
                       min_size=1, max_size=5).map(lambda rows: (rows, c))),
       st.sampled_from([2, 3, 5, 7]))
def test_compiled_and_pure_kernels_agree(data, p):
    rows, cols = data
    pure = _fpkernel.rref_mod_p(rows, cols, p)
    if _fpkernel_c is not None:
        assert _fpkernel_c.rref_mod_p(rows, cols, p) == pure
    # sanity against the generic field path
    m = Mat.from_rows(Field(p), rows, cols=cols)
    assert rref(m)[0].entries == [list(r) for r in pure[0]]


def test_membership_and_coords_roundtrip():
    A = Subspace.from_vectors(QQ, 3, [[1, 0, 1], [0, 1, 2]])
    v = [Fraction(2), Fraction(-3), Fraction(-4)]
    assert A.member(v)
    cs = A.coords(v)
    acc = [Fraction(0)] * 3
    for c, b in zip(cs, A.basis_vectors()):
        acc = [a + c * x for a, x in zip(acc, b)]
    assert acc == v
    assert not A.member([1, 1, 1])


def test_gf2_field_arithmetic():
    assert GF2.of(Fraction(1, 3)) == 1
    assert GF2.add(1, 1) == 0
    assert GF2.inv(1) == 1
