"""Tests for the truncated group-ring cells and their polynomial filtration."""

import math
import random

from hypothesis import given, settings, strategies as st

from eigenalg import passi
from eigenalg.exactla import QQ
from eigenalg.passi import (FR, GR, SparseGroupElt, compose_elts,
                            compose_keys, identity_key, passi_cell)


from eigenalg.freealg import GrTuple, Word


def rand_gr_key(rng, n, m):
    return GrTuple(n, m, tuple(
        Word(n, [rng.choice([i for i in range(-n, n + 1) if i])
                 for _ in range(rng.randint(0, 3))])
        for _ in range(m)))


def gr_key(n, m, words):
    return GrTuple(n, m, tuple(Word(n, w) for w in words))


def test_compose_keys_is_associative_and_unital():
    rng = random.Random(11)
    for kind in (GR, FR):
        for _ in range(200):
            n, m, l, k = (rng.randint(1, 3) for _ in range(4))
            if kind == GR:
                f = rand_gr_key(rng, n, m)
                g = rand_gr_key(rng, m, l)
                h = rand_gr_key(rng, l, k)
            else:
                f = tuple(tuple(rng.randint(-2, 2) for _ in range(n))
                          for _ in range(m))
                g = tuple(tuple(rng.randint(-2, 2) for _ in range(m))
                          for _ in range(l))
                h = tuple(tuple(rng.randint(-2, 2) for _ in range(l))
                          for _ in range(k))
            lhs = compose_keys(kind, h, compose_keys(kind, g, f, n=n), n=n)
            rhs = compose_keys(kind, compose_keys(kind, h, g, n=m), f, n=n)
            assert lhs == rhs
            assert compose_keys(kind, identity_key(kind, m), f, n=n) == f
            assert compose_keys(kind, f, identity_key(kind, n), n=n) == f


def test_compose_elts_is_bilinear_sample():
    a = SparseGroupElt(GR, 2, 1, {gr_key(2, 1, [(1,)]): 2,
                                  gr_key(2, 1, [(2,)]): -1})
    b = SparseGroupElt(GR, 1, 2, {gr_key(1, 2, [(1,), (-1,)]): 1,
                                  gr_key(1, 2, [(), (1,)]): 3})
    ab = compose_elts(b, a)
    # coefficient of a composite is the product of the input coefficients
    assert ab.terms[gr_key(2, 2, [(1,), (-1,)])] == 2
    assert ab.terms[gr_key(2, 2, [(2,), (-2,)])] == -1
    assert ab.terms[gr_key(2, 2, [(), (1,)])] == 3 * 2
    assert ab.terms[gr_key(2, 2, [(), (2,)])] == 3 * -1


def test_cell_dimensions_match_closed_forms():
    for n in range(1, 4):
        for m in range(1, 4):
            for d in range(4):
                gr = passi_cell(GR, n, m, d).dim
                assert gr == sum(n ** k * math.comb(m + k - 1, k)
                                 for k in range(d + 1))
                fr = passi_cell(FR, n, m, d).dim
                assert fr == sum(math.comb(n * m + k - 1, k)
                                 for k in range(d + 1))


def test_quotient_map_is_linear_and_unital():
    rng = random.Random(5)
    cell = passi_cell(GR, 2, 2, 3)
    # every group element is sent to a series with constant term 1
    unit = cell.q(SparseGroupElt.identity(GR, 2))
    const = cell.index[((), ())]
    assert unit[const] == 1
    assert cell.q(SparseGroupElt.single(
        GR, 2, 2, rand_gr_key(random.Random(1), 2, 2)))[const] == 1
    for _ in range(25):
        f = SparseGroupElt.single(GR, 2, 2, rand_gr_key(rng, 2, 2))
        g = SparseGroupElt.single(GR, 2, 2, rand_gr_key(rng, 2, 2))
        lin = cell.q(f.add(g, scale=-3))
        qf, qg = cell.q(f), cell.q(g)
        assert lin == [a - 3 * b for a, b in zip(qf, qg)]


def test_augmentation_powers_are_nested():
    for kind in (GR, FR):
        cell = passi_cell(kind, 2, 2, 3)
        subs = [passi.aug_power(cell, d) for d in range(4)]
        for a, b in zip(subs, subs[1:]):
            assert a.contains(b)
        assert subs[0].dim == cell.dim


def test_filtration_witness_at_the_one_one_cell():
    assert passi.filtration_witness(GR, 3) == [1, 1, 1, 1]
    assert passi.filtration_witness(FR, 3) == [1, 1, 1, 1]


def test_graded_dims_are_rank_differences():
    cell = passi_cell(GR, 2, 2, 3)
    for d in range(4):
        lo = passi_cell(GR, 2, 2, d).dim
        prev = passi_cell(GR, 2, 2, d - 1).dim if d else 0
        assert passi.graded_dim(cell, d) == lo - prev


def test_passi_monad_satisfies_laws_small_window():
    from eigenalg import monadcore
    for kind in (GR, FR):
        grid = passi.passi_monad(kind, 1, range(0, 3))
        assert monadcore.check_monad_laws(grid) == []
