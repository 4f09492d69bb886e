"""Tests for the group-tuple primitive layer: Hall coordinates, the
exponential action, and the theta-kernel description of the Lie cells."""

import math
import random
from fractions import Fraction

import pytest

from eigenalg import primgr
from eigenalg.exactla import QQ
from eigenalg.freealg import GrTuple, Word
from eigenalg.passi import GR, SparseGroupElt, compose_elts


def test_ass_basis_counts_are_rising_factorials():
    for m in range(4):
        for n in range(4):
            expect = 1
            for k in range(n):
                expect *= m + k
            assert len(primgr.ass_basis(m, n)) == expect


def test_lie_basis_counts_match_the_closed_form():
    for m in range(1, 5):
        for n in range(1, 5):
            expect = 0
            # sum over assignments with nonempty fibers of prod (|fiber|-1)!
            import itertools
            for assign in itertools.product(range(m), repeat=n):
                fibers = [sum(1 for a in assign if a == i) for i in range(m)]
                if any(f == 0 for f in fibers):
                    continue
                t = 1
                for f in fibers:
                    t *= math.factorial(f - 1)
                expect += t
            assert len(primgr.lie_basis(m, n)) == expect
            assert primgr.lie_dim_formula(m, n) == expect


def test_exp_action_is_functorial_on_samples():
    rng = random.Random(3)
    for _ in range(40):
        n, m, l = rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 3)

        def rtuple(gens, count):
            return GrTuple(gens, count, tuple(
                Word(gens, [rng.choice([i for i in range(-gens, gens + 1)
                                        if i])
                            for _ in range(rng.randint(0, 2))])
                for _ in range(count)))

        f = rtuple(n, m)   # cell (m, n)
        g = rtuple(m, l)   # cell (l, m)
        v = primgr.identity_tensor(n, D=6)
        via_f = primgr.exp_action(f, v)
        lhs = primgr.exp_action(g, via_f)
        rhs = primgr.exp_action(g.substitute(f), v)
        assert lhs == rhs


def test_exp_action_identity_and_antipode():
    v = primgr.identity_tensor(2, D=4)
    assert primgr.exp_action(GrTuple.identity(2), v) == v
    # inverse generator reverses and signs the received word
    t = GrTuple(1, 1, (Word(1, (-1,)),))
    w = primgr.exp_action(t, primgr.identity_tensor(1, D=3))
    assert w.coeffs == {((1,),): Fraction(-1)}


def test_R_after_E_is_the_identity_on_bases():
    for m in range(3):
        for n in range(3):
            for b in primgr.ass_basis(m, n):
                e = SparseGroupElt(GR, n, m, {primgr.E_map(b, m, n): 1})
                assert primgr.R_map(e) == {b: Fraction(1)}


def test_theta_kernel_equals_the_lie_cell():
    for m in range(1, 4):
        for n in range(1, 4):
            ker, basis, idx = primgr.theta_kernel(m, n)
            assert ker.dim == primgr.lie_dim_formula(m, n)
            assert ker == primgr.beta_image_space(m, n)


def test_hall_coordinate_solve_roundtrip():
    # expanding a Hall combination and solving back returns the coefficients
    from eigenalg.freealg import hall_set, hall_expand
    letters = (1, 2, 3)
    delta = {i: 1 for i in letters}
    trees = hall_set(delta)
    for t in trees:
        p = hall_expand(t, n=3)
        sol_trees, coords = primgr.solve_hall(
            letters, {mono[0]: c for mono, c in p.coeffs.items()})
        expect = {u: (1 if u == t else 0) for u in trees}
        assert dict(zip(sol_trees, coords)) == expect
    # a plain word is not in the Lie span
    with pytest.raises(ValueError):
        primgr.solve_hall(letters, {(1, 2, 3): Fraction(1)})


def test_lie_compose_agrees_with_group_level_composition():
    # beta is natural: beta(g o f) = R(E(beta g) o E(beta f))
    rep = primgr.prim_eigenmonad_check([(2, 2)], rng=random.Random(0),
                                       pairs=10)
    assert rep["transport_ok"] is True


def test_exp_action_rejects_non_multilinear_input():
    from eigenalg.freealg import TensorPoly
    bad = TensorPoly(2, 2, 4, {((1, 1), ()): Fraction(1)})
    with pytest.raises(primgr.NotMultilinear):
        primgr.exp_action(GrTuple.identity(2), bad)


def test_multilinear_functor_degrees():
    import eigenalg.passi as passi
    Fp = primgr.multilinear_functor(2, range(0, 4))
    assert passi.polynomial_degree_leq(Fp, 2) is True
    assert passi.polynomial_degree_leq(Fp, 1) is False
