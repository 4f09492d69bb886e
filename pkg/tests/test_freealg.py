"""Property tests for words, tensor algebras, Magnus expansion and Hall trees."""

import itertools
import math
from functools import reduce

from hypothesis import given, settings, strategies as st

from eigenalg import freealg
from eigenalg.exactla import QQ, Subspace
from eigenalg.freealg import (GrTuple, Word, hall_expand, hall_set, magnus,
                              multilinear_basis, poly_to_vector,
                              primitive_part, word_inv, word_mul)


def words(n, max_len=6):
    return st.lists(
        st.sampled_from([i for i in range(-n, n + 1) if i]),
        min_size=0, max_size=max_len).map(lambda ls: Word(n, ls))


@settings(max_examples=80, deadline=None)
@given(words(2), words(2), words(2))
def test_word_group_axioms(a, b, c):
    assert word_mul(word_mul(a, b), c) == word_mul(a, word_mul(b, c))
    e = Word.identity(2)
    assert word_mul(a, e) == a and word_mul(e, a) == a
    assert word_mul(a, word_inv(a)) == e
    assert word_inv(word_inv(a)) == a


@settings(max_examples=60, deadline=None)
@given(words(2, 4), words(2, 4), st.integers(1, 3))
def test_magnus_is_a_homomorphism(a, b, D):
    assert magnus(word_mul(a, b), D) == magnus(a, D).mul(magnus(b, D))


@settings(max_examples=60, deadline=None)
@given(words(3, 5))
def test_magnus_constant_term_is_one(a):
    p = magnus(a, 2)
    assert p.coeffs.get(((),)) == 1


def test_free_reduction():
    w = Word(2, (1, 2, -2, -1, 1))
    assert w.letters == (1,)
    assert Word(2, (1, -1)).letters == ()


def test_multilinear_basis_counts():
    # m-tuples of words jointly using each of the letters exactly once:
    # rising factorial m(m+1)...(m+n-1)
    for m in range(0, 4):
        for n in range(0, 4):
            expect = 1
            for k in range(n):
                expect *= m + k
            assert len(multilinear_basis(m, range(1, n + 1))) == expect


def _mobius(n):
    r, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            r = -r
        d += 1
    if n > 1:
        r = -r
    return r


def witt_dimension(parts):
    """Multigraded free Lie algebra dimension by Möbius inversion."""
    tot = sum(parts)
    g = reduce(math.gcd, parts)
    s = 0
    for d in range(1, g + 1):
        if g % d:
            continue
        mult = math.factorial(tot // d)
        for a in parts:
            mult //= math.factorial(a // d)
        s += _mobius(d) * mult
    return s // tot


def test_hall_sets_match_witt_dimensions():
    for n in (1, 2, 3, 4):
        for total in range(1, 5):
            for comp in itertools.product(range(total + 1), repeat=n):
                if sum(comp) != total or comp[-1] == 0:
                    continue
                delta = {i + 1: c for i, c in enumerate(comp) if c}
                assert len(hall_set(delta)) == \
                    witt_dimension([c for c in comp if c])


def test_hall_expansions_independent_and_primitive():
    for n in (2, 3, 4):
        delta = {i: 1 for i in range(1, n + 1)}
        sub, basis = primitive_part(1, n, delta)
        idx = {b: i for i, b in enumerate(basis)}
        trees = hall_set(delta)
        vecs = [poly_to_vector(hall_expand(t, n=n), idx, QQ) for t in trees]
        span = Subspace.from_vectors(QQ, len(basis), vecs)
        assert span.dim == len(trees)  # linearly independent
        assert span == sub             # and they span the primitives


def test_grtuple_substitution_is_associative():
    rho = GrTuple(2, 2, (Word(2, (1, 2)), Word(2, (-1,))))
    sigma = GrTuple(2, 2, (Word(2, (2,)), Word(2, (1, 1))))
    tau = GrTuple(2, 2, (Word(2, (-2, 1)), Word(2, ())))
    assert rho.substitute(sigma).substitute(tau) == \
        rho.substitute(sigma.substitute(tau))
    assert rho.substitute(GrTuple.identity(2)) == rho
    assert GrTuple.identity(2).substitute(rho) == rho
