"""Finite-maps and symmetric-groups monads, and primitivity for free modules.

L^B_Fin(m, n) has basis (f, b) with f: {1..n} -> {1..m} and b an n-tuple of
basis elements of a small coefficient algebra B; L^B_S restricts to
bijections and is a monad.  Matrix morphisms tau^X act on L^B_Fin through
five generator formulas; theta = tau^[1 1] - tau^[1 0] - tau^[0 1] cuts out
the symmetric-group part as the vanishing module.  E_R translates between
matrix combinations modulo theta-composites and L_Fin, alpha/gamma relate
free-group tuples to matrices, and the char-2 exterior-algebra module gives
the strict-containment example for the vanishing construction.
"""

import itertools
import random
from fractions import Fraction

from .exactla import GF2, Mat, Subspace, intersect_many, kernel, QQ
from .freealg import GrTuple, Word
from .passi import FR, GR, SparseGroupElt, compose_keys, passi_cell


class NotAnAlgebra(ValueError):
    """Structure constants fail associativity or the unit law."""


# ---------------------------------------------------------------------------
# coefficient algebras
# ---------------------------------------------------------------------------

class RingB:
    """A finite-dimensional associative unital algebra by structure constants.

    table[i][j] is the product e_i * e_j as a dense coefficient list; unit is
    the coefficient list of 1.  Associativity and the unit law are checked.
    """

    def __init__(self, field, dim, table, unit, name="B"):
        self.field = field
        self.dim = dim
        self.table = [[list(map(field.of, v)) for v in row] for row in table]
        self.unit = list(map(field.of, unit))
        self.name = name
        self._check()

    def _check(self):
        F = self.field
        d = self.dim
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    lhs = [F.zero] * d
                    for t in range(d):
                        c = self.table[i][j][t]
                        if c != F.zero:
                            for s in range(d):
                                lhs[s] = F.add(lhs[s],
                                               F.mul(c, self.table[t][k][s]))
                    rhs = [F.zero] * d
                    for t in range(d):
                        c = self.table[j][k][t]
                        if c != F.zero:
                            for s in range(d):
                                rhs[s] = F.add(rhs[s],
                                               F.mul(c, self.table[i][t][s]))
                    if lhs != rhs:
                        raise NotAnAlgebra(f"associativity at {(i, j, k)}")
        for i in range(d):
            le = self.mul_vec(self.unit, self._basis_vec(i))
            ri = self.mul_vec(self._basis_vec(i), self.unit)
            if le != self._basis_vec(i) or ri != self._basis_vec(i):
                raise NotAnAlgebra(f"unit law at basis {i}")

    def _basis_vec(self, i):
        v = [self.field.zero] * self.dim
        v[i] = self.field.one
        return v

    def mul_basis(self, i, j):
        """Product of basis elements as a dense coefficient list."""
        return self.table[i][j]

    def mul_vec(self, a, b):
        F = self.field
        out = [F.zero] * self.dim
        for i, ca in enumerate(a):
            if ca == F.zero:
                continue
            for j, cb in enumerate(b):
                if cb == F.zero:
                    continue
                c = F.mul(ca, cb)
                for s in range(self.dim):
                    out[s] = F.add(out[s], F.mul(c, self.table[i][j][s]))
        return out

    def __repr__(self):
        return f"RingB({self.name}, dim {self.dim})"


def ring_k(field=None):
    """The ground field itself as a coefficient algebra."""
    F = field or QQ
    return RingB(F, 1, [[[1]]], [1], name="k")


def dual_numbers(field=None):
    """k[x]/(x^2) with basis (1, x)."""
    F = field or QQ
    table = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]
    return RingB(F, 2, table, [1, 0], name="k[x]/(x^2)")


# ---------------------------------------------------------------------------
# L^B_Fin elements
# ---------------------------------------------------------------------------

def fin_maps(n, m):
    """All maps {1..n} -> {1..m} as value tuples, sorted."""
    return sorted(itertools.product(range(1, m + 1), repeat=n))


def fin_bijections(n, m):
    if n != m:
        return []
    return sorted(itertools.permutations(range(1, n + 1)))


def lfin_basis(B, m, n):
    """Basis labels (f, b-index tuple) of L^B_Fin(m, n)."""
    return [(f, bs) for f in fin_maps(n, m)
            for bs in itertools.product(range(B.dim), repeat=n)]


def ls_basis(B, m, n):
    return [(f, bs) for f in fin_bijections(n, m)
            for bs in itertools.product(range(B.dim), repeat=n)]


class FinMapElt:
    """A k-linear combination of (b_1 x ... x b_n)_f in a fixed cell (m, n)."""

    __slots__ = ("B", "m", "n", "terms")

    def __init__(self, B, m, n, terms=None):
        self.B = B
        self.m = m
        self.n = n
        self.terms = {}
        if terms:
            for k, c in terms.items():
                if c != B.field.zero:
                    cur = self.terms.get(k, B.field.zero)
                    self.terms[k] = B.field.add(cur, c)
            self.terms = {k: c for k, c in self.terms.items()
                          if c != B.field.zero}

    @classmethod
    def single(cls, B, m, n, f, bs=None, coeff=None):
        bs = bs if bs is not None else tuple(0 for _ in range(n))
        c = coeff if coeff is not None else B.field.one
        return cls(B, m, n, {(tuple(f), tuple(bs)): c})

    def add(self, other, scale=1):
        F = self.B.field
        s = F.of(scale)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = F.add(out.get(k, F.zero), F.mul(s, c))
        return FinMapElt(self.B, self.m, self.n, out)

    def scale(self, c):
        F = self.B.field
        c = F.of(c)
        return FinMapElt(self.B, self.m, self.n,
                         {k: F.mul(c, v) for k, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, FinMapElt) and \
            (self.m, self.n) == (other.m, other.n) and \
            self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        bits = []
        for (f, bs), c in sorted(self.terms.items()):
            bits.append(f"{c}*(b{list(bs)})_{list(f)}")
        return " + ".join(bits) or "0"


def compose_fin_keys(B, gkey, fkey):
    """(b')_g o (b)_f = (b_i b'_{f(i)})_{g o f}; returns {key: scalar}.

    gkey lives in cell (l, m), fkey in (m, n); the composite map sends
    i to g[f(i) - 1].
    """
    g, bsg = gkey
    f, bsf = fkey
    comp = tuple(g[f[i] - 1] for i in range(len(f)))
    # coefficient slot i carries b_i * b'_{f(i)}; expand the products
    out = {}
    factors = [B.mul_basis(bsf[i], bsg[f[i] - 1]) for i in range(len(f))]
    F = B.field
    for combo in itertools.product(*[range(B.dim) for _ in factors]):
        c = F.one
        for fac, idx in zip(factors, combo):
            c = F.mul(c, fac[idx])
            if c == F.zero:
                break
        if c != F.zero:
            key = (comp, tuple(combo))
            out[key] = F.add(out.get(key, F.zero), c)
    return out


def compose_fin(g_elt, f_elt):
    B = g_elt.B
    F = B.field
    out = {}
    for kg, cg in g_elt.terms.items():
        for kf, cf in f_elt.terms.items():
            c = F.mul(cg, cf)
            for k, cc in compose_fin_keys(B, kg, kf).items():
                out[k] = F.add(out.get(k, F.zero), F.mul(c, cc))
    return FinMapElt(B, g_elt.m, f_elt.n, out)


def unit_key(B, n):
    return (tuple(range(1, n + 1)),
            tuple(_unit_index(B) for _ in range(n)))


def _unit_index(B):
    # the unit must be a basis element for basis-level units; both shipped
    # algebras satisfy this (unit = e_0)
    for i, c in enumerate(B.unit):
        if c != B.field.zero:
            return i
    raise NotAnAlgebra("zero unit")


def ls_monad(B, window):
    """The monad of bijections with B-coefficients on a window."""
    from . import monadcore
    win = window if hasattr(window, "indices") \
        else monadcore.IndexWindow(window)
    cells = {(m, n): ls_basis(B, m, n)
             for m in win.indices for n in win.indices}

    def compose_fn(l, m, n, g, f):
        return compose_fin_keys(B, g, f)

    def unit_fn(n):
        return {unit_key(B, n): 1}

    return monadcore.MonadGrid.from_compose(B.field, win, cells, compose_fn,
                                            unit_fn)


def lfin_grid(B, window):
    """The based spaces L^B_Fin(m, n) over a window (the bimodule carrier)."""
    from . import monadcore
    win = window if hasattr(window, "indices") \
        else monadcore.IndexWindow(window)
    cells = {(m, n): lfin_basis(B, m, n)
             for m in win.indices for n in win.indices}
    return monadcore.GridSpaces(B.field, win, cells)


def right_sigma_action(elt, sigma):
    """(b)_f . sigma = (b_{sigma(1)}, ..., b_{sigma(n)})_{f o sigma}."""
    out = {}
    F = elt.B.field
    for (f, bs), c in elt.terms.items():
        nf = tuple(f[sigma[i] - 1] for i in range(len(f)))
        nbs = tuple(bs[sigma[i] - 1] for i in range(len(f)))
        out[(nf, nbs)] = F.add(out.get((nf, nbs), F.zero), c)
    return FinMapElt(elt.B, elt.m, elt.n, out)


# ---------------------------------------------------------------------------
# fiber combinators and the five generator actions
# ---------------------------------------------------------------------------

def c_map(m, j):
    """c_{m,j} in Fin(m, m-1): merge j and j+1 (values k > j drop by one)."""
    if not 1 <= j <= m - 1:
        raise ValueError("need 1 <= j <= m-1")
    return tuple(k if k <= j else k - 1 for k in range(1, m + 1))


def h_map(m, j):
    """h_{m,j} in Fin(m, m+1): injective, skipping the value j+1."""
    if not 0 <= j <= m:
        raise ValueError("need 0 <= j <= m")
    return tuple(k if k <= j else k + 1 for k in range(1, m + 1))


def diag_action(j, elt):
    """The diagonal at slot j: (b)_f -> sum over f' with c_{m+1,j} o f' = f."""
    m, n = elt.m, elt.n
    cm = c_map(m + 1, j)
    out = {}
    F = elt.B.field
    for (f, bs), c in elt.terms.items():
        for choice in itertools.product(*[( (f[i],) if f[i] != j
                                            else (j, j + 1) )
                                          for i in range(n)]):
            fp = tuple(v if f[i] != j else choice[i]
                       for i, v in enumerate(
                           tuple(f[i] if f[i] <= j else f[i] + 1
                                 for i in range(n))))
            key = (fp, bs)
            out[key] = F.add(out.get(key, F.zero), c)
    return FinMapElt(elt.B, m + 1, n, out)


def fold_action(j, elt):
    """Multiplication at slot j: (b)_f -> (b)_{c_{m,j} o f}."""
    m, n = elt.m, elt.n
    cm = c_map(m, j)
    out = {}
    F = elt.B.field
    for (f, bs), c in elt.terms.items():
        nf = tuple(cm[v - 1] for v in f)
        out[(nf, bs)] = F.add(out.get((nf, bs), F.zero), c)
    return FinMapElt(elt.B, m - 1, n, out)


def insert_action(j, elt):
    """Unit insertion after slot j: (b)_f -> (b)_{h_{m,j} o f}."""
    m, n = elt.m, elt.n
    hm = h_map(m, j)
    out = {}
    F = elt.B.field
    for (f, bs), c in elt.terms.items():
        nf = tuple(hm[v - 1] for v in f)
        out[(nf, bs)] = F.add(out.get((nf, bs), F.zero), c)
    return FinMapElt(elt.B, m + 1, n, out)


def counit_action(j, elt):
    """Counit at slot j: keep (b)_{f'} when f = h_{m-1,j-1} o f', else 0.

    Kills terms whose map hits the value j; renumbers the rest down.
    """
    m, n = elt.m, elt.n
    out = {}
    F = elt.B.field
    for (f, bs), c in elt.terms.items():
        if any(v == j for v in f):
            continue
        nf = tuple(v if v < j else v - 1 for v in f)
        out[(nf, bs)] = F.add(out.get((nf, bs), F.zero), c)
    return FinMapElt(elt.B, m - 1, n, out)


def scalar_action(a, j, elt):
    """tau^[a] at slot j: multiply b_i by a for every i in the fiber of j."""
    out = {}
    F = elt.B.field
    for (f, bs), c in elt.terms.items():
        k = sum(1 for v in f if v == j)
        cc = F.mul(c, F.of(a ** k)) if k else c
        out[(f, bs)] = F.add(out.get((f, bs), F.zero), cc)
    return FinMapElt(elt.B, elt.m, elt.n, out)


def theta_fr_key():
    """theta = tau^[1 1] - tau^[1 0] - tau^[0 1] as an fr SparseGroupElt."""
    return SparseGroupElt(FR, 1, 2, {
        ((1,), (1,)): 1, ((1,), (0,)): -1, ((0,), (1,)): -1})


def theta_fr_action(j, elt):
    """The theta-dilation at slot j: diagonal minus the two unit-inserts.

    Equals the sum over f' with c_{m+1,j} o f' = f whose fibers at j and
    j+1 are both nonempty.
    """
    m = elt.m
    res = diag_action(j, elt)
    res = res.add(insert_action(j, elt), scale=-1)
    res = res.add(insert_action(j - 1, elt), scale=-1)
    return res


def vanishing_fin(B, m, n):
    """Joint kernel of the theta-dilations on L^B_Fin(m, n).

    Returns (Subspace, basis labels); dim = n! * dim(B)^n when m = n else 0.
    """
    F = B.field
    basis = lfin_basis(B, m, n)
    index = {b: i for i, b in enumerate(basis)}
    target = lfin_basis(B, m + 1, n)
    tindex = {b: i for i, b in enumerate(target)}
    kers = []
    for j in range(1, m + 1):
        cols = []
        for b in basis:
            img = theta_fr_action(
                j, FinMapElt(B, m, n, {b: F.one}))
            v = [F.zero] * len(target)
            for k, c in img.terms.items():
                v[tindex[k]] = c
            cols.append(v)
        mat = Mat.from_rows(F, cols, cols=len(target)).transpose()
        kers.append(kernel(mat))
    return intersect_many(kers, F, len(basis)), basis


# ---------------------------------------------------------------------------
# E_R and its inverse
# ---------------------------------------------------------------------------

def matrix_to_key(X):
    """An n x m integer matrix (list of rows) as an fr morphism key."""
    n = len(X)
    m = len(X[0]) if n else 0
    return tuple(tuple(X[i][j] for i in range(n)) for j in range(m))


def key_to_matrix(key, n):
    return [[key[j][i] for j in range(len(key))] for i in range(n)]


def E_R_inverse(key, n, m, B=None):
    """E_R^{-1}(tau^X) = sum_f (prod_i X[i, f(i)]) (1)_f in L_Fin(m, n).

    ``key`` is an fr morphism key (m columns of length n); B defaults to the
    ground-field algebra.
    """
    B = B or ring_k()
    F = B.field
    u = _unit_index(B)
    out = {}
    for f in fin_maps(n, m):
        c = 1
        for i in range(n):
            c *= key[f[i] - 1][i]
            if c == 0:
                break
        if c:
            out[(f, tuple(u for _ in range(n)))] = F.of(c)
    return FinMapElt(B, m, n, out)


def E_R_inverse_elt(elt, B=None):
    """Linear extension over an fr-kind SparseGroupElt."""
    B = B or ring_k()
    out = FinMapElt(B, elt.m, elt.n)
    for key, c in elt.terms.items():
        out = out.add(E_R_inverse(key, elt.n, elt.m, B), scale=c)
    return out


def E_R(elt):
    """A coset representative: (1)_f -> tau^{X_f} with X_f[i, f(i)] = 1.

    ``elt`` must have ground-field coefficients (B = k).
    """
    terms = {}
    for (f, bs), c in elt.terms.items():
        key = tuple(tuple(1 if f[i] - 1 == j else 0
                          for i in range(elt.n))
                    for j in range(elt.m))
        terms[key] = terms.get(key, 0) + _as_int(c)
    return SparseGroupElt(FR, elt.n, elt.m, terms)


def _as_int(c):
    if isinstance(c, Fraction):
        return c
    return c


def theta_composite(X, j):
    """Theta-composite keys: rows j, j+1 of X merged through the dilation.

    X is n x m with n >= 2 and 1 <= j <= n-1.  Returns the keys of
    (I + [1 1] + I)X, (I + [1 0] + I)X, (I + [0 1] + I)X, three (n-1) x m
    matrices in the cell (m, n-1); E_R^{-1} of key0 - key1 - key2 vanishes
    (the well-definedness relation behind E_R).
    """
    n = len(X)
    m = len(X[0])

    def merge(row_pair):
        rows = []
        for t in range(n - 1):
            if t < j - 1:
                rows.append(X[t])
            elif t > j - 1:
                rows.append(X[t + 1])
            else:
                rows.append([row_pair[0] * X[j - 1][c] +
                             row_pair[1] * X[j][c] for c in range(m)])
        return matrix_to_key(rows)
    return merge((1, 1)), merge((1, 0)), merge((0, 1))


# ---------------------------------------------------------------------------
# abelianization
# ---------------------------------------------------------------------------

def abelianization(t):
    """alpha: a gr-kind SparseGroupElt to fr kind via exponent sums."""
    terms = {}
    for key, c in t.terms.items():
        mk = tuple(w.exponent_sums() for w in key.words)
        terms[mk] = terms.get(mk, 0) + c
    return SparseGroupElt(FR, t.n, t.m, terms)


def gamma_section(elt):
    """gamma: tau^X to [x_1^{X[1,j]} ... x_n^{X[n,j]}]_j (a gr element)."""
    terms = {}
    for key, c in elt.terms.items():
        words = []
        for col in key:
            letters = []
            for i, a in enumerate(col):
                g = i + 1
                letters.extend([g if a > 0 else -g] * abs(a))
            words.append(Word(elt.n, letters))
        gk = GrTuple(elt.n, elt.m, tuple(words))
        terms[gk] = terms.get(gk, 0) + c
    return SparseGroupElt(GR, elt.n, elt.m, terms)


def graded_alpha_compare(n, m, d, D=None):
    """Graded-piece dimensions of the augmentation filtrations on both sides.

    The gr side has dim n^d * C(m+d-1, d) in degree d, the fr side
    C(nm+d-1, d); gamma splits the comparison, and they agree exactly when
    d in {0, 1} or n = 1.
    """
    from .passi import graded_dim
    D = D if D is not None else d
    gc = passi_cell(GR, n, m, D)
    fc = passi_cell(FR, n, m, D)
    gr_dim = graded_dim(gc, d)
    fr_dim = graded_dim(fc, d)
    return {"gr_dim": gr_dim, "fr_dim": fr_dim,
            "split_epi": gr_dim >= fr_dim,
            "iso": gr_dim == fr_dim}


# ---------------------------------------------------------------------------
# the exterior-algebra module and the char-2 example
# ---------------------------------------------------------------------------

def _wedge_basis(dimW, n):
    """Basis of the n-th exterior power: sorted index subsets."""
    return list(itertools.combinations(range(dimW), n))


def _perm_sign(sigma):
    sign = 1
    s = list(sigma)
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            if s[i] > s[j]:
                sign = -sign
    return sign


class ExteriorTensorCell:
    """(L_Fin tensor_{S} Wedge W)(m) over a window of inner arities.

    Basis of the ambient space: (n, f, S) with f in Fin(n, m) and S a wedge
    basis subset of size n; the quotient imposes f.sigma tensor z =
    f tensor sigma_* z, where sigma acts on the wedge by the signature
    (trivially when ``unsigned``; the honest convention over F_2 and the
    naive integral lift used for the rational contrast).
    """

    def __init__(self, field, m, inner_window, dimW=2, unsigned=False):
        from . import monadcore
        self.field = field
        self.m = m
        self.dimW = dimW
        self.inner = list(inner_window)
        self.unsigned = unsigned
        self.ambient = [(n, f, S) for n in self.inner
                        for f in fin_maps(n, m)
                        for S in _wedge_basis(dimW, n)]
        self.index = {b: i for i, b in enumerate(self.ambient)}
        F = field
        rels = []
        for n in self.inner:
            for sigma in itertools.permutations(range(1, n + 1)):
                if sigma == tuple(range(1, n + 1)):
                    continue
                for f in fin_maps(n, m):
                    fs = tuple(f[sigma[i] - 1] for i in range(n))
                    for S in _wedge_basis(dimW, n):
                        # sigma_*(w_{S1} ^ ... ^ w_{Sn}) permutes the slots;
                        # resorting contributes the signature
                        sign = 1 if unsigned else \
                            _perm_sign([sigma.index(i + 1)
                                        for i in range(n)])
                        v = [F.zero] * len(self.ambient)
                        v[self.index[(n, fs, S)]] = F.one
                        v[self.index[(n, f, S)]] = F.sub(
                            v[self.index[(n, f, S)]], F.of(sign))
                        rels.append(v)
        sub = Subspace.from_vectors(F, len(self.ambient), rels)
        self.quot = monadcore.QuotientCell(sub)

    def dim(self):
        return self.quot.dim

    def vector(self, terms):
        """Quotient coordinates of {(n, f, S): coeff}."""
        F = self.field
        v = [F.zero] * len(self.ambient)
        for k, c in terms.items():
            i = self.index[k]
            v[i] = F.add(v[i], F.of(c))
        return self.quot.project(v)


def _theta_matrix_between(cell1, cell2):
    """The slot-1 theta-dilation from cell1 (m) to cell2 (m+1) on quotients."""
    F = cell1.field
    Bk = ring_k(F)
    rows = []
    for qi in range(cell1.dim()):
        amb = cell1.quot.lift([F.one if t == qi else F.zero
                               for t in range(cell1.dim())])
        out = {}
        for i, c in enumerate(amb):
            if c == F.zero:
                continue
            n, f, S = cell1.ambient[i]
            bs = tuple(0 for _ in range(n))
            elt = theta_fr_action(1, FinMapElt(Bk, cell1.m, n,
                                               {(f, bs): F.one}))
            for (fp, _bs), cc in elt.terms.items():
                key = (n, fp, S)
                out[key] = F.add(out.get(key, F.zero), F.mul(c, cc))
        v = [F.zero] * len(cell2.ambient)
        for k, c in out.items():
            v[cell2.index[k]] = F.add(v[cell2.index[k]], c)
        rows.append(cell2.quot.project(v))
    return rows


def exterior_char2_check():
    """The exterior-algebra module over F_2: theta kills f_2 (x) (w1 ^ w2).

    Over F_2 the displayed element is nonzero, its theta-image vanishes, and
    the degree-(1) part of the wedge module sits strictly inside the
    vanishing cell.  Carrying the same (unsigned) module structure to the
    rationals, the two image terms no longer cancel: the theta-image is
    2 (id_2 (x) w1^w2), which is nonzero.
    """
    report = {}
    inner = [0, 1, 2]
    # --- over F_2 ---
    F = GF2
    m1 = ExteriorTensorCell(F, 1, inner, unsigned=False)
    m2 = ExteriorTensorCell(F, 2, inner, unsigned=False)
    f2 = (2, (1, 1), (0, 1))  # f_2 (x) (w_1 ^ w_2)
    v1 = m1.vector({f2: 1})
    report["element_nonzero_f2"] = any(c != F.zero for c in v1)
    theta_rows = _theta_matrix_between(m1, m2)
    img = [F.zero] * m2.dim()
    for qi, c in enumerate(v1):
        if c != F.zero:
            for t in range(m2.dim()):
                img[t] = F.add(img[t], F.mul(c, theta_rows[qi][t]))
    report["theta_image_zero_f2"] = all(c == F.zero for c in img)
    # vanishing cell at (1): kernel of the theta-dilation on M(1)
    mat = Mat.from_rows(F, theta_rows, cols=m2.dim()).transpose()
    V = kernel(mat)
    wedge1 = Subspace.from_vectors(
        F, m1.dim(), [m1.vector({(1, (1,), (w,)): 1}) for w in range(2)])
    report["v_dim_f2"] = V.dim
    report["wedge1_dim"] = wedge1.dim
    report["strict_containment_f2"] = V.contains(wedge1) and \
        V.dim > wedge1.dim
    # --- rational contrast with the naive (unsigned) lift ---
    Q = QQ
    q1 = ExteriorTensorCell(Q, 1, inner, unsigned=True)
    q2 = ExteriorTensorCell(Q, 2, inner, unsigned=True)
    v1q = q1.vector({f2: 1})
    rows_q = _theta_matrix_between(q1, q2)
    imgq = [Q.zero] * q2.dim()
    for qi, c in enumerate(v1q):
        if c != Q.zero:
            for t in range(q2.dim()):
                imgq[t] = Q.add(imgq[t], Q.mul(c, rows_q[qi][t]))
    report["theta_image_nonzero_qq"] = any(c != Q.zero for c in imgq)
    twice_id = q2.vector({(2, (1, 2), (0, 1)): 2})
    report["qq_image_is_twice_id"] = imgq == twice_id
    return report
