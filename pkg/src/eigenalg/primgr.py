"""Operad monads on free groups and the primitivity ideal.

A_Ass(m, n) has basis the m-tuples of words using each letter x_1..x_n
exactly once; A_Lie(m, n) has basis fiber assignments with a Hall tree per
fiber.  E rereads word tuples as free-group tuples, the exponential action
realizes free-group morphisms on tensor powers of the free Hopf algebra, and
R evaluates at the identity tensor.  The kernel of the theta-dilation
actions recovers A_Lie inside A_Ass.
"""

import itertools
from fractions import Fraction

from .exactla import Mat, Subspace, intersect_many, kernel, QQ
from .freealg import (GrTuple, HallTree, TensorPoly, Word, hall_expand,
                      hall_set, multilinear_basis)


class NotMultilinear(ValueError):
    """exp_action requires a multilinear tensor polynomial."""


# ---------------------------------------------------------------------------
# basis elements
# ---------------------------------------------------------------------------

def ass_basis(m, n):
    """All m-tuples of words partitioning the letters 1..n, sorted."""
    return multilinear_basis(m, range(1, n + 1))


def ass_compose(g, f, n_inner):
    """Substitute: g is an l-tuple over letters 1..m, f an m-tuple over 1..n."""
    out = []
    for word in g:
        piece = []
        for l in word:
            piece.extend(f[l - 1])
        out.append(tuple(piece))
    return tuple(out)


def lie_basis(m, n):
    """Fiber assignments {1..n} -> {1..m} with nonempty fibers, a Hall tree
    per fiber.  Returns a sorted list of (assignment tuple, trees tuple)."""
    out = []
    for assign in itertools.product(range(1, m + 1), repeat=n):
        fibers = [tuple(i + 1 for i in range(n) if assign[i] == j)
                  for j in range(1, m + 1)]
        if any(not fib for fib in fibers):
            continue
        tree_lists = [hall_set({l: 1 for l in fib}) for fib in fibers]
        for trees in itertools.product(*tree_lists):
            out.append((assign, trees))
    return sorted(out, key=lambda b: (b[0], tuple(t.order_key()
                                                  for t in b[1])))


def lie_dim_formula(m, n):
    """Sum over nonempty-fiber assignments of prod (|fiber| - 1)!."""
    import math
    total = 0
    for assign in itertools.product(range(1, m + 1), repeat=n):
        sizes = [sum(1 for a in assign if a == j) for j in range(1, m + 1)]
        if 0 in sizes:
            continue
        p = 1
        for s in sizes:
            p *= math.factorial(s - 1)
        total += p
    return total


def beta_elt(basis_elt, m, n):
    """Expand a Lie basis element into the multilinear word basis.

    Returns {ass tuple: coeff}.
    """
    assign, trees = basis_elt
    factor_polys = []
    for t in trees:
        factor_polys.append(hall_expand(t, n=n))
    acc = {(): Fraction(1)}
    for poly in factor_polys:
        nxt = {}
        for pref, c in acc.items():
            for mono, cc in poly.coeffs.items():
                word = mono[0]
                nxt[pref + (word,)] = nxt.get(pref + (word,), 0) + c * cc
        acc = nxt
    return {k: v for k, v in acc.items() if v != 0}


# solving tensor words back into the Hall basis, per fiber ------------------

_hall_coord_cache = {}


def hall_coords(letters):
    """Return (trees, solver) for the multidegree-1 component over letters.

    solver maps a word-coefficient dict (permutation words of the letters) to
    coordinates over the Hall tree list.
    """
    key = tuple(sorted(letters))
    if key in _hall_coord_cache:
        return _hall_coord_cache[key]
    trees = hall_set({l: 1 for l in key})
    perms = sorted(itertools.permutations(key))
    index = {p: i for i, p in enumerate(perms)}
    rows = []
    for t in trees:
        p = hall_expand(t, n=max(key))
        v = [Fraction(0)] * len(perms)
        for mono, c in p.coeffs.items():
            v[index[mono[0]]] = c
        rows.append(v)
    mat = Mat.from_rows(QQ, rows, cols=len(perms))
    _hall_coord_cache[key] = (trees, index, mat)
    return _hall_coord_cache[key]


def solve_hall(letters, word_coeffs):
    """Coordinates over Hall trees of a Lie element given by word coeffs."""
    trees, index, mat = hall_coords(letters)
    target = [Fraction(0)] * mat.cols
    for w, c in word_coeffs.items():
        target[index[w]] += c
    # solve c_row * mat = target
    from .exactla import rref
    aug_rows = [[mat.entries[i][j] for i in range(mat.rows)] + [target[j]]
                for j in range(mat.cols)]
    R, piv = rref(Mat.from_rows(QQ, aug_rows, cols=mat.rows + 1))
    coords = [Fraction(0)] * mat.rows
    for r, p in zip(R.entries, piv):
        if p == mat.rows:
            raise ValueError("element not in the Lie span")
        coords[p] = r[mat.rows]
    return trees, coords


def lie_compose(g_elt, f_elt, l, m, n):
    """Compose Lie basis elements: substitute f's fiber trees into g's leaves.

    g_elt is a basis element of A_Lie(l, m), f_elt of A_Lie(m, n); the result
    is a coefficient dict over lie_basis(l, n) elements.
    """
    g_assign, g_trees = g_elt
    f_assign, f_trees = f_elt

    def subst(tree):
        if tree.is_leaf:
            return f_trees[tree.letter - 1]
        return _RawTree(subst(tree.left), subst(tree.right))

    # new assignment: letter i (1..n) goes to the g-fiber of f_assign[i]
    new_assign = tuple(g_assign[f_assign[i] - 1] for i in range(n))
    per_fiber = []
    for j in range(1, l + 1):
        letters = tuple(i + 1 for i in range(n) if new_assign[i] == j)
        raw = subst(g_trees[j - 1])
        poly = _expand_raw(raw, n, len(letters))
        word_coeffs = {mono[0]: c for mono, c in poly.coeffs.items()}
        trees, coords = solve_hall(letters, word_coeffs)
        per_fiber.append((trees, coords))
    out = {}
    for combo in itertools.product(*[range(len(t)) for t, _ in per_fiber]):
        coeff = Fraction(1)
        trees = []
        for (tl, coords), idx in zip(per_fiber, combo):
            coeff *= coords[idx]
            trees.append(tl[idx])
        if coeff != 0:
            out[(new_assign, tuple(trees))] = \
                out.get((new_assign, tuple(trees)), 0) + coeff
    return {k: v for k, v in out.items() if v != 0}


class _RawTree:
    """A plain binary tree (no Hall condition) for substitution results."""

    __slots__ = ("left", "right")

    def __init__(self, left, right):
        self.left = left
        self.right = right


def _expand_raw(t, n, D):
    if isinstance(t, HallTree):
        return hall_expand(t, n=n, D=D)
    a = _expand_raw(t.left, n, D)
    b = _expand_raw(t.right, n, D)
    return a.mul(b).add(b.mul(a), scale=-1)


# ---------------------------------------------------------------------------
# monads
# ---------------------------------------------------------------------------

def ass_monad(window, field=None):
    from . import monadcore
    F = field or QQ
    win = monadcore.IndexWindow(window) if not hasattr(window, "indices") \
        else window
    cells = {(m, n): ass_basis(m, n)
             for m in win.indices for n in win.indices}

    def compose_fn(l, m, n, g, f):
        return {ass_compose(g, f, n): 1}

    def unit_fn(n):
        return {tuple((i + 1,) for i in range(n)): 1}

    return monadcore.MonadGrid.from_compose(F, win, cells, compose_fn,
                                            unit_fn)


def lie_monad(window, field=None):
    from . import monadcore
    F = field or QQ
    win = monadcore.IndexWindow(window) if not hasattr(window, "indices") \
        else window
    cells = {(m, n): lie_basis(m, n)
             for m in win.indices for n in win.indices}

    def compose_fn(l, m, n, g, f):
        return lie_compose(g, f, l, m, n)

    def unit_fn(n):
        key = (tuple(range(1, n + 1)),
               tuple(HallTree(letter=i + 1) for i in range(n)))
        return {key: 1}

    return monadcore.MonadGrid.from_compose(F, win, cells, compose_fn,
                                            unit_fn)


# ---------------------------------------------------------------------------
# E, the exponential action, R
# ---------------------------------------------------------------------------

def E_map(ass_elt, m, n):
    """Reread an A_Ass basis element as a free-group tuple."""
    return GrTuple(n, m, tuple(Word(n, w, reduce=False) for w in ass_elt))


def theta_gr():
    """theta = [x1|x1]_1 - [e|x1]_1 - [x1|e]_1 in L(2, 1)."""
    from .passi import SparseGroupElt, GR
    x = Word.gen(1, 1)
    e = Word.identity(1)
    return SparseGroupElt(GR, 1, 2, {
        GrTuple(1, 2, (x, x)): 1,
        GrTuple(1, 2, (e, x)): -1,
        GrTuple(1, 2, (x, e)): -1})


def theta_dilation(i, n):
    """id_{i-1} x theta x id_{n-i} as a SparseGroupElt in L(n+1, n)."""
    from .passi import SparseGroupElt, GR
    terms = {}
    x = [Word.gen(n, j + 1) for j in range(n)]
    e = Word.identity(n)
    combos = [((x[i - 1], x[i - 1]), 1), ((e, x[i - 1]), -1),
              ((x[i - 1], e), -1)]
    for (a, b), sign in combos:
        words = tuple(x[:i - 1]) + (a, b) + tuple(x[i:])
        terms[GrTuple(n, n + 1, words)] = sign
    return SparseGroupElt(GR, n, n + 1, terms)


def exp_action(t, v):
    """Act by a free-group tuple on a multilinear tensor polynomial.

    ``t`` is a GrTuple with m words over l generators (an element of the
    (m, l) cell); ``v`` must have l tensor factors.  The recipe: comultiply
    each input factor once per occurrence of its generator across the words
    of t (reading left to right), apply the antipode on inverse occurrences,
    and multiply the distributed pieces inside each output word in order.
    """
    if not v.is_multilinear():
        raise NotMultilinear("input is not multilinear")
    l = t.n
    m = t.m
    if v.m != l:
        raise NotMultilinear(f"factor count {v.m} != generator count {l}")
    # occurrence lists: for generator i, the sequence of (word index, sign)
    occ = [[] for _ in range(l)]
    slots = []  # per word: list of (generator, occurrence index, sign)
    for j, w in enumerate(t.words):
        slot = []
        for letter in w.letters:
            g = abs(letter) - 1
            sign = 1 if letter > 0 else -1
            occ[g].append((j, sign))
            slot.append((g, len(occ[g]) - 1, sign))
        slots.append(slot)
    out = TensorPoly(v.n, m, v.D)
    acc = {}
    for mono, coeff in v.coeffs.items():
        # distribute the letters of each input factor over its occurrences
        choices = []
        ok = True
        for g in range(l):
            word = mono[g]
            c = len(occ[g])
            if c == 0:
                if word:
                    ok = False
                    break
                choices.append([()])
                continue
            opts = []
            for assign in itertools.product(range(c), repeat=len(word)):
                pieces = [tuple(word[k] for k in range(len(word))
                                if assign[k] == ci) for ci in range(c)]
                opts.append(tuple(pieces))
            choices.append(opts)
        if not ok:
            continue
        for combo in itertools.product(*choices):
            sign = 1
            words_out = [[] for _ in range(m)]
            for j in range(m):
                for (g, oi, s) in slots[j]:
                    piece = combo[g][oi] if occ[g] else ()
                    if s < 0:
                        piece = tuple(reversed(piece))
                        sign *= (-1) ** len(piece)
                    words_out[j].extend(piece)
            key = tuple(tuple(w) for w in words_out)
            acc[key] = acc.get(key, 0) + coeff * sign
    out.coeffs = {k: c for k, c in acc.items() if c != 0}
    return out


def exp_action_elt(elt, v):
    """Linear extension of exp_action to a SparseGroupElt (gr kind)."""
    out = None
    for key, c in elt.terms.items():
        r = exp_action(key, v).scale(Fraction(c))
        out = r if out is None else out.add(r)
    if out is None:
        return TensorPoly(v.n, elt.m, v.D)
    return out


def identity_tensor(n, D=None):
    """x_1 tensor ... tensor x_n."""
    D = D if D is not None else max(n, 1)
    return TensorPoly(max(n, 1), n, D,
                      {tuple((i + 1,) for i in range(n)): Fraction(1)})


def R_map(elt):
    """R(f) = f acting on the identity tensor; lands in the multilinear part.

    ``elt`` is a SparseGroupElt in the (m, n) cell.  Returns a coefficient
    dict over ass_basis(m, n).
    """
    n = elt.n
    v = identity_tensor(n)
    res = exp_action_elt(elt, v)
    return {mono: c for mono, c in res.coeffs.items()}


def ass_to_vector(coeffs, basis_index, field):
    vec = [field.zero] * len(basis_index)
    for mono, c in coeffs.items():
        vec[basis_index[mono]] = field.of(c)
    return vec


# ---------------------------------------------------------------------------
# theta kernels = A_Lie
# ---------------------------------------------------------------------------

def theta_kernel(m, n, field=None):
    """The joint kernel of the theta-dilation actions on A_Ass(m, n)."""
    F = field or QQ
    basis = ass_basis(m, n)
    index = {b: i for i, b in enumerate(basis)}
    target = ass_basis(m + 1, n)
    tindex = {b: i for i, b in enumerate(target)}
    kers = []
    for j in range(1, m + 1):
        th = theta_dilation(j, m)
        rows = []
        for b in basis:
            v = TensorPoly(max(n, 1), m, max(n, 1),
                           {b: Fraction(1)})
            img = exp_action_elt(th, v)
            rows.append(ass_to_vector(dict(img.coeffs), tindex, F))
        mat = Mat.from_rows(F, rows, cols=len(target)).transpose() if rows \
            else Mat.zero(F, len(target), 0)
        kers.append(kernel(mat))
    return intersect_many(kers, F, len(basis)), basis, index


def beta_image_space(m, n, field=None):
    """The span of beta over the Lie basis inside the A_Ass coordinate space."""
    F = field or QQ
    basis = ass_basis(m, n)
    index = {b: i for i, b in enumerate(basis)}
    vecs = []
    for b in lie_basis(m, n):
        coeffs = beta_elt(b, m, n)
        vecs.append(ass_to_vector(coeffs, index, F))
    return Subspace.from_vectors(F, len(basis), vecs)


def prim_eigenmonad_check(cells, rng=None, pairs=25, field=None):
    """Per cell: theta-kernel equals the beta image (exact Subspace equality).

    Also transports composition through R on random Lie basis pairs:
    R(E(beta(a)) o E(beta(b))) = beta(a o b).  Returns a report dict.
    """
    from .passi import SparseGroupElt, GR, compose_elts
    F = field or QQ
    report = {"cells": [], "transport_ok": True}
    for (m, n) in cells:
        ker, basis, _ = theta_kernel(m, n, F)
        img = beta_image_space(m, n, F)
        report["cells"].append({
            "cell": (m, n), "kernel_dim": ker.dim,
            "lie_dim": len(lie_basis(m, n)),
            "equal": ker == img})
    if rng is not None:
        done = 0
        attempts = 0
        while done < pairs and attempts < pairs * 40:
            attempts += 1
            l, m, n = (rng.randint(1, 2), rng.randint(1, 2),
                       rng.randint(1, 3))
            lb_g = lie_basis(l, m)
            lb_f = lie_basis(m, n)
            if not lb_g or not lb_f:
                continue
            a = lb_g[rng.randrange(len(lb_g))]
            b = lb_f[rng.randrange(len(lb_f))]
            ga = _beta_as_elt(a, l, m)
            fb = _beta_as_elt(b, m, n)
            lhs = R_map(compose_elts(ga, fb))
            comp = lie_compose(a, b, l, m, n)
            rhs = {}
            for key, c in comp.items():
                for mono, cc in beta_elt(key, l, n).items():
                    rhs[mono] = rhs.get(mono, 0) + c * cc
            rhs = {k: Fraction(v) for k, v in rhs.items() if v != 0}
            lhs = {k: Fraction(v) for k, v in lhs.items() if v != 0}
            if lhs != rhs:
                report["transport_ok"] = False
            done += 1
        report["transport_pairs"] = done
    return report


def multilinear_functor(N, labels, field=None, check_samples=()):
    """F(m) = multilinear part of the m-fold tensor power over N letters.

    Morphisms act through the exponential action; returns a passi
    FunctorPresentation on the given window labels.
    """
    from .passi import FunctorPresentation
    F = field or QQ
    labels = tuple(labels)
    bases = {x: multilinear_basis(x, range(1, N + 1)) for x in labels}
    indexes = {x: {b: i for i, b in enumerate(bs)}
               for x, bs in bases.items()}

    def apply_key(t):
        x, y = t.n, t.m
        cols = []
        for b in bases[x]:
            v = TensorPoly(N, x, N, {b: Fraction(1)})
            img = exp_action(t, v)
            col = [F.zero] * len(bases[y])
            for mono, c in img.coeffs.items():
                col[indexes[y][mono]] = F.of(c)
            cols.append(col)
        return Mat.from_rows(F, cols, cols=len(bases[y])).transpose()

    return FunctorPresentation(GR_KIND, labels,
                               {x: len(bases[x]) for x in labels},
                               apply_key, F, check_samples)


GR_KIND = "gr"


def _beta_as_elt(lie_b, m, n):
    """beta of a Lie basis element as a SparseGroupElt via E."""
    from .passi import SparseGroupElt, GR
    terms = {}
    for mono, c in beta_elt(lie_b, m, n).items():
        terms[E_map(mono, m, n)] = c
    return SparseGroupElt(GR, n, m, terms)
