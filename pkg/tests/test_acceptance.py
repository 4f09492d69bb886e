"""Acceptance suite: the frozen headline results, checked exactly.

Every expected value here comes from an independent oracle (closed-form
combinatorics via math.comb / math.factorial) or is a frozen spot value,
never from the code under test.
"""

import itertools
import math
import random
from fractions import Fraction

import pytest

from eigenalg import cli, monadcore, outerh, passi, primfr, primgr
from eigenalg.exactla import GF2, QQ, Subspace
from eigenalg.freealg import (GrTuple, Word, hall_expand, hall_set,
                              multilinear_basis, poly_to_vector,
                              primitive_part)
from eigenalg.passi import FR, GR, SparseGroupElt


# --- oracles ---------------------------------------------------------------

def gr_rank_oracle(n, m, d):
    total = 0
    for k in range(d + 1):
        c = 1 if m + k - 1 < 0 and k == 0 else math.comb(m + k - 1, k)
        total += n ** k * c
    return total


def fr_rank_oracle(n, m, d):
    total = 0
    for k in range(d + 1):
        c = 1 if n * m + k - 1 < 0 and k == 0 else math.comb(n * m + k - 1, k)
        total += c
    return total


def lie_dim_oracle(m, n):
    """Sum over surjection-fiber assignments of prod (|fiber| - 1)!."""
    total = 0
    for assign in itertools.product(range(m), repeat=n):
        fibers = [sum(1 for a in assign if a == i) for i in range(m)]
        if any(f == 0 for f in fibers):
            continue
        t = 1
        for f in fibers:
            t *= math.factorial(f - 1)
        total += t
    return total


def _mobius(k):
    r, d = 1, 2
    while d * d <= k:
        if k % d == 0:
            k //= d
            if k % d == 0:
                return 0
            r = -r
        d += 1
    if k > 1:
        r = -r
    return r


def witt_oracle(parts):
    tot = sum(parts)
    g = 0
    for a in parts:
        g = math.gcd(g, a)
    s = 0
    for d in range(1, g + 1):
        if g % d:
            continue
        mult = math.factorial(tot // d)
        for a in parts:
            mult //= math.factorial(a // d)
        s += _mobius(d) * mult
    return s // tot


# --- criterion 1: gr ranks -------------------------------------------------

def test_criterion_01_gr_ranks():
    for n in range(4):
        for m in range(4):
            for d in range(4):
                assert passi.passi_cell(GR, n, m, d).dim == \
                    gr_rank_oracle(n, m, d)
    assert passi.passi_cell(GR, 2, 1, 2).dim == 7
    assert passi.passi_cell(GR, 2, 2, 1).dim == 5
    assert passi.passi_cell(GR, 2, 2, 2).dim == 17


# --- criterion 2: fr ranks -------------------------------------------------

def test_criterion_02_fr_ranks():
    for n in range(4):
        for m in range(4):
            for d in range(4):
                assert passi.passi_cell(FR, n, m, d).dim == \
                    fr_rank_oracle(n, m, d)
    assert passi.passi_cell(FR, 1, 1, 2).dim == 3
    assert passi.passi_cell(FR, 2, 2, 2).dim == 15


# --- criterion 3: ideal equality ------------------------------------------

def test_criterion_03_ideal_equality():
    for kind in (GR, FR):
        for n in (1, 2):
            for m in (1, 2):
                for d in (1, 2, 3):
                    cell = passi.passi_cell(kind, n, m, d)
                    target = passi.aug_power(cell, d)
                    fam = passi.polynomial_ideal(cell, d, word_len_bound=3)
                    assert fam == target
                    rep = passi.kappa_generators(cell, d, family_bound=2000)
                    assert rep["span_equal"] and rep["product_form"]


# --- criterion 4: monad laws ----------------------------------------------

W3 = range(0, 4)


@pytest.mark.parametrize("name,build", [
    ("passi-gr-d1", lambda: passi.passi_monad(GR, 1, W3)),
    ("passi-fr-d1", lambda: passi.passi_monad(FR, 1, W3)),
    ("passi-gr-d2", lambda: passi.passi_monad(GR, 2, W3)),
    ("passi-fr-d2", lambda: passi.passi_monad(FR, 2, W3)),
    ("ass", lambda: primgr.ass_monad(W3)),
    ("lie", lambda: primgr.lie_monad(W3)),
    ("ls-k", lambda: primfr.ls_monad(primfr.ring_k(), W3)),
    ("ls-dual", lambda: primfr.ls_monad(primfr.dual_numbers(), W3)),
])
def test_criterion_04_monad_laws(name, build):
    assert monadcore.check_monad_laws(build()) == []


# --- criteria 5 and 6: eigenring examples and the four descriptions -------

def _matrix_instance():
    T = cli._matrix_algebra_example()
    J = monadcore.left_ideal_closure(T, {(0, 0): [{1: QQ.one}, {3: QQ.one}]})
    return T, J


def _group_instance():
    T = cli._c2_group_algebra()
    J = monadcore.left_ideal_closure(T, {(0, 0): [{0: QQ.one,
                                                   1: QQ.of(-1)}]})
    return T, J


def test_criterion_05_eigenring_examples():
    T, J = _matrix_instance()
    assert J.dims()[(0, 0)] == 2
    assert monadcore.idealizer(T, J).dims()[(0, 0)] == 3
    em = monadcore.eigenmonad(T, J)
    assert em.grid.dim(0, 0) == 1
    mods = monadcore.quotient_bimodule_modules(em)
    NE, _ = monadcore.vanishing_as_E_module(em, mods[0])
    assert monadcore.tensor_over_E(em, NE).dim(0) == 2  # the column space

    T2, J2 = _group_instance()
    M2 = monadcore.regular_module(T2)[0]
    V2 = monadcore.vanishing_module(T2, J2, M2)
    assert V2.dims()[0] == 1  # the invariants


def test_criterion_06_four_descriptions_agree():
    for T, J in (_matrix_instance(), _group_instance()):
        em = monadcore.eigenmonad(T, J)
        dE = em.grid.dim(0, 0)
        mods = monadcore.quotient_bimodule_modules(em)
        dV = monadcore.vanishing_module(T, J, mods[0]).dims()[0]
        dH = monadcore.hom_modules(mods[0], mods[0]).dim
        assert dV == dE and dH == dE


# --- criterion 7: gr primitivity ------------------------------------------

def test_criterion_07_R_after_E_and_theta_kernels():
    for m in range(4):
        for n in range(4):
            for b in primgr.ass_basis(m, n):
                e = SparseGroupElt(GR, n, m, {primgr.E_map(b, m, n): 1})
                assert primgr.R_map(e) == {b: Fraction(1)}
    cells = [(m, n) for n in range(1, 4) for m in range(1, 5)]
    cells += [(1, 4), (2, 4), (3, 4)]
    for m, n in cells:
        ker, _, _ = primgr.theta_kernel(m, n)
        assert ker.dim == lie_dim_oracle(m, n)
    # frozen spot values from the statement
    assert lie_dim_oracle(1, 2) == 1
    assert lie_dim_oracle(1, 3) == 2
    assert lie_dim_oracle(2, 3) == 6
    assert lie_dim_oracle(3, 2) == 0  # any m > n vanishes
    rep = primgr.prim_eigenmonad_check([(2, 2), (2, 3), (3, 2)],
                                       rng=random.Random(20240816), pairs=50)
    assert rep["transport_ok"] is True
    assert rep["transport_pairs"] >= 50


# --- criterion 8: Hall bases ----------------------------------------------

def test_criterion_08_hall_sets_and_primitives():
    for n in (1, 2, 3, 4):
        for total in range(1, 5):
            for comp in itertools.product(range(total + 1), repeat=n):
                if sum(comp) != total or comp[-1] == 0:
                    continue
                delta = {i + 1: c for i, c in enumerate(comp) if c}
                assert len(hall_set(delta)) == \
                    witt_oracle([c for c in comp if c])
    assert len(hall_set({1: 1, 2: 1, 3: 1})) == 2
    for n in (1, 2, 3, 4):  # multilinear multidegrees with |delta| <= 4
        delta = {i: 1 for i in range(1, n + 1)}
        sub, basis = primitive_part(1, n, delta)
        idx = {b: i for i, b in enumerate(basis)}
        trees = hall_set(delta)
        vecs = [poly_to_vector(hall_expand(t, n=n), idx, QQ) for t in trees]
        span = Subspace.from_vectors(QQ, len(basis), vecs)
        assert span.dim == len(trees)
        assert span == sub


# --- criterion 9: fr primitivity ------------------------------------------

def test_criterion_09_fr_primitivity():
    Bk = primfr.ring_k()
    for m in range(4):
        for n in range(4):
            for b in primfr.lfin_basis(Bk, m, n):
                x = primfr.FinMapElt(Bk, m, n, {b: QQ.one})
                assert primfr.E_R_inverse_elt(primfr.E_R(x)) == x
    rng = random.Random(20240816)
    for _ in range(100):
        n, m = rng.randint(2, 4), rng.randint(1, 3)
        X = [[rng.randint(-3, 3) for _ in range(m)] for _ in range(n)]
        j = rng.randint(1, n - 1)
        terms = {}
        for k, c in zip(primfr.theta_composite(X, j), (1, -1, -1)):
            terms[k] = terms.get(k, 0) + c
        z = primfr.E_R_inverse_elt(SparseGroupElt(FR, n - 1, m, terms))
        assert z.is_zero()
    for B, mul in ((Bk, 1), (primfr.ring_k(GF2), 1)):
        for m in range(4):
            for n in range(4):
                V, _ = primfr.vanishing_fin(B, m, n)
                assert V.dim == (math.factorial(n) * mul if m == n else 0)


# --- criterion 10: abelianization -----------------------------------------

def test_criterion_10_abelianization():
    rng = random.Random(20240816)
    for _ in range(200):
        n, m = rng.randint(0, 3), rng.randint(0, 3)
        key = tuple(tuple(rng.randint(-2, 2) for _ in range(n))
                    for _ in range(m))
        e = SparseGroupElt(FR, n, m, {key: 1})
        assert primfr.abelianization(primfr.gamma_section(e)) == e
    for n in range(1, 4):
        for m in range(1, 4):
            for d in (0, 1):
                r = primfr.graded_alpha_compare(n, m, d)
                assert r["iso"] and r["gr_dim"] == r["fr_dim"]
    r = primfr.graded_alpha_compare(2, 1, 2)
    assert (r["gr_dim"], r["fr_dim"]) == (4, 3)
    assert r["split_epi"] and not r["iso"]


# --- criterion 11: outer exchange -----------------------------------------

def test_criterion_11_outer():
    rng = random.Random(20240816)

    def rword(n, L=4):
        return Word(n, [rng.choice([i for i in range(-n, n + 1) if i])
                        for _ in range(rng.randint(0, L))])

    for _ in range(500):
        n, m = rng.randint(1, 3), rng.randint(1, 3)
        rho = GrTuple(n, m, tuple(rword(n) for _ in range(m)))
        g = rword(m)
        holds, _ = outerh.outer_exchange_check(g, rho)
        assert holds
    for _ in range(100):
        n = rng.randint(1, 3)
        g = rword(n)
        conj = outerh.ad_action(g, GrTuple.identity(n))
        diff = primfr.abelianization(
            SparseGroupElt.single(GR, n, n, conj)).add(
            primfr.abelianization(SparseGroupElt.identity(GR, n)), scale=-1)
        assert diff.terms == {}


# --- criterion 12: exterior example in characteristic two ------------------

def test_criterion_12_char2_exterior():
    rep = primfr.exterior_char2_check()
    assert rep["element_nonzero_f2"] is True
    assert rep["theta_image_zero_f2"] is True
    assert rep["theta_image_nonzero_qq"] is True
    assert rep["strict_containment_f2"] is True
    assert rep["v_dim_f2"] == 3 and rep["wedge1_dim"] == 2


# --- criterion 13: analyticity slice ---------------------------------------

def test_criterion_13_analyticity_slice():
    rep = passi.analyticity_slice(GR, lambda x: x + 1, (1, 2))
    computed = {r["pair"]: r for r in rep if r["status"] == "computed"}
    assert set(computed) == {(1, 1), (2, 1), (2, 2)}
    for r in computed.values():
        assert r["cap_stable"] is True
        assert r["computed"] == r["expected"]
    assert computed[(2, 1)]["computed"] == gr_rank_oracle(1, 2, 1)   # 3
    assert computed[(2, 2)]["computed"] == gr_rank_oracle(2, 2, 2)   # 17
    assert passi.filtration_witness(GR, 3) == [1, 1, 1, 1]


# --- criterion 14: polynomial degree bound ---------------------------------

def test_criterion_14_polynomial_degree_bound():
    Fp = primgr.multilinear_functor(2, range(0, 4))
    assert passi.polynomial_degree_leq(Fp, 2) is True
    assert passi.polynomial_degree_leq(Fp, 1) is False
