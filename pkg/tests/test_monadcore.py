"""Tests for the one-window monad layer: laws, ideals, eigenmonads."""

import pytest

from eigenalg import monadcore
from eigenalg.exactla import QQ


def matrix_algebra():
    # basis e11, e12, e21, e22 of the 2x2 matrix algebra
    idx = [(0, 0), (0, 1), (1, 0), (1, 1)]
    rid = {v: k for k, v in enumerate(idx)}
    table = []
    for (i, j) in idx:
        row = []
        for (k, l) in idx:
            dense = [0, 0, 0, 0]
            if j == k:
                dense[rid[(i, l)]] = 1
            row.append(dense)
        table.append(row)
    return monadcore.algebra_data(QQ, 4, table, [1, 0, 0, 1])


def group_algebra_c2():
    table = [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]
    return monadcore.algebra_data(QQ, 2, table, [1, 0])


def test_monad_laws_hold_for_associative_algebras():
    assert monadcore.check_monad_laws(matrix_algebra()) == []
    assert monadcore.check_monad_laws(group_algebra_c2()) == []


def test_monad_laws_detect_corruption():
    T = matrix_algebra()
    tensor = T.comp[(0, 0, 0)]
    (i, j), col = sorted(tensor.items())[0]
    c = sorted(col)[0]
    col[c] = T.field.add(col[c], T.field.one)
    assert monadcore.check_monad_laws(T) != []


def test_left_ideal_closure_and_idealizer():
    T = matrix_algebra()
    # e12, e22 generate the second matrix column
    J = monadcore.left_ideal_closure(T, {(0, 0): [{1: QQ.one}, {3: QQ.one}]})
    assert J.dims()[(0, 0)] == 2
    I = monadcore.idealizer(T, J)
    assert I.dims()[(0, 0)] == 3
    # the idealizer contains the ideal and the unit
    assert I.spaces[(0, 0)].contains(J.spaces[(0, 0)])
    assert I.spaces[(0, 0)].member([QQ.one, QQ.zero, QQ.zero, QQ.one])


def test_eigenmonad_of_column_ideal_is_scalars():
    T = matrix_algebra()
    J = monadcore.left_ideal_closure(T, {(0, 0): [{1: QQ.one}, {3: QQ.one}]})
    em = monadcore.eigenmonad(T, J)
    assert em.grid.dim(0, 0) == 1
    assert monadcore.check_monad_laws(em.grid) == []


def test_vanishing_module_of_group_algebra_is_invariants():
    T = group_algebra_c2()
    J = monadcore.left_ideal_closure(T, {(0, 0): [{0: QQ.one,
                                                   1: QQ.of(-1)}]})
    M = monadcore.regular_module(T)[0]
    V = monadcore.vanishing_module(T, J, M)
    assert V.dims()[0] == 1
    # e + s spans the invariants
    assert V.spaces[0].member([QQ.one, QQ.one])


def test_hom_of_regular_module_has_algebra_dimension():
    for T in (matrix_algebra(), group_algebra_c2()):
        M = monadcore.regular_module(T)[0]
        hom = monadcore.hom_modules(M, M)
        assert hom.dim == len(T.cells[(0, 0)])


def test_adjunction_checks_on_both_examples():
    T = matrix_algebra()
    J = monadcore.left_ideal_closure(T, {(0, 0): [{1: QQ.one}, {3: QQ.one}]})
    em = monadcore.eigenmonad(T, J)
    mods = monadcore.quotient_bimodule_modules(em)
    NE, _ = monadcore.vanishing_as_E_module(em, mods[0])
    M = monadcore.regular_module(T)[0]
    res = monadcore.adjunction_checks(em, M, NE)
    assert res["counit_epi"] is True and res["unit_mono"] is True

    T2 = group_algebra_c2()
    J2 = monadcore.left_ideal_closure(T2, {(0, 0): [{0: QQ.one,
                                                     1: QQ.of(-1)}]})
    em2 = monadcore.eigenmonad(T2, J2)
    mods2 = monadcore.quotient_bimodule_modules(em2)
    NE2, _ = monadcore.vanishing_as_E_module(em2, mods2[0])
    M2 = monadcore.regular_module(T2)[0]
    res2 = monadcore.adjunction_checks(em2, M2, NE2)
    assert res2["counit_epi"] is False and res2["unit_mono"] is True
