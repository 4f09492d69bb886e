"""Passi quotients and polynomial/analyticity ideals for free and free
abelian groups.

The computational model is the Magnus truncation: the group algebra embeds in
a truncated tensor (resp. polynomial) algebra, the augmentation filtration
becomes the degree filtration, and the rank theorems certify that the
truncated image is the whole truncated algebra.  A PassiCell is that
truncated algebra with its monomial basis and the quotient map q.

Morphism-level elements (tuples of free-group words, or integer matrices)
live in SparseGroupElt; pi_d builds the alternating diagonal elements whose
left ideal is the polynomial ideal.
"""

import itertools
from fractions import Fraction

from .exactla import Mat, Subspace, kernel, QQ
from .freealg import (GrTuple, Word, abelian_magnus, magnus_tuple, word_inv,
                      word_mul)


class DegreeOutOfRange(ValueError):
    pass


class GenerationIncomplete(RuntimeError):
    """The bounded generating family did not span the full ideal."""


class WindowTooSmall(ValueError):
    """A degree check needs objects beyond the presented window."""


class HypothesisViolated(ValueError):
    """A requested pair violates the analyticity hypothesis nu(Y) >= nu(X)."""


GR = "gr"
FR = "fr"


# ---------------------------------------------------------------------------
# morphism-level elements
# ---------------------------------------------------------------------------

class SparseGroupElt:
    """A finite k-linear combination of morphisms n -> m.

    For kind 'gr' the support keys are GrTuple values (m words over n
    generators); for kind 'fr' they are n x m integer matrices stored as
    m-tuples of length-n column tuples.
    """

    __slots__ = ("kind", "n", "m", "terms")

    def __init__(self, kind, n, m, terms=None):
        self.kind = kind
        self.n = n
        self.m = m
        self.terms = {}
        if terms:
            for k, c in terms.items():
                if c != 0:
                    self.terms[k] = self.terms.get(k, 0) + c
            self.terms = {k: c for k, c in self.terms.items() if c != 0}

    @classmethod
    def single(cls, kind, n, m, key, coeff=1):
        return cls(kind, n, m, {key: coeff})

    @classmethod
    def identity(cls, kind, n):
        return cls.single(kind, n, n, identity_key(kind, n))

    def add(self, other, scale=1):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + scale * c
        return SparseGroupElt(self.kind, self.n, self.m, out)

    def scale(self, c):
        return SparseGroupElt(self.kind, self.n, self.m,
                              {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, SparseGroupElt) and \
            (self.kind, self.n, self.m) == (other.kind, other.n, other.m) \
            and self.terms == other.terms

    def __repr__(self):
        return " + ".join(f"{c}*{k}" for k, c in self.terms.items()) or "0"


def identity_key(kind, n):
    if kind == GR:
        return GrTuple.identity(n)
    return tuple(tuple(1 if i == j else 0 for i in range(n))
                 for j in range(n))


def compose_keys(kind, g, f, n=None):
    """Compose support keys: g: m -> l after f: n -> m gives n -> l."""
    if kind == GR:
        return g.substitute(f)
    # matrices: f is an m-tuple of columns in Z^n, g an l-tuple in Z^m;
    # composite column j = sum_i g[j][i] * f[i]
    if n is None:
        n = len(f[0]) if f else 0
    out = []
    for gcol in g:
        col = [0] * n
        for i, a in enumerate(gcol):
            if a:
                for r in range(n):
                    col[r] += a * f[i][r]
        out.append(tuple(col))
    return tuple(out)


def compose_elts(g, f):
    """Bilinear composition of SparseGroupElt values."""
    assert g.kind == f.kind and g.n == f.m
    out = {}
    for kg, cg in g.terms.items():
        for kf, cf in f.terms.items():
            k = compose_keys(g.kind, kg, kf, n=f.n)
            out[k] = out.get(k, 0) + cg * cf
    return SparseGroupElt(g.kind, f.n, g.m, out)


# ---------------------------------------------------------------------------
# Passi cells
# ---------------------------------------------------------------------------

def _gr_monomials(n, m, D):
    """All m-tuples of words in positive letters 1..n with total length <= D,
    ordered by total degree then lexicographically."""
    def words_of_len(k):
        return list(itertools.product(range(1, n + 1), repeat=k))
    out = []
    for total in range(D + 1):
        for comp in _compositions(total, m):
            for parts in itertools.product(
                    *[words_of_len(k) for k in comp]):
                out.append(tuple(parts))
        # sort within the degree block for determinism
    return sorted(set(out), key=lambda mono: (sum(len(f) for f in mono), mono))


def _compositions(total, parts):
    if parts == 0:
        return [()] if total == 0 else []
    out = []
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


def _fr_monomials(n, m, D):
    """Exponent matrices (m-tuples of length-n column tuples), total <= D."""
    cells = n * m
    out = []
    for flat in _bounded_vectors(cells, D):
        cols = tuple(tuple(flat[j * n:(j + 1) * n]) for j in range(m))
        out.append(cols)
    return sorted(set(out), key=lambda mono: (sum(sum(c) for c in mono), mono))


def _bounded_vectors(length, total_max):
    if length == 0:
        return [()]
    out = []
    for first in range(total_max + 1):
        for rest in _bounded_vectors(length - 1, total_max - first):
            out.append((first,) + rest)
    return out


class PassiCell:
    """The truncated quotient k[C_n^{x m}] / I^{D+1} with monomial basis."""

    def __init__(self, kind, n, m, D, field=None):
        self.kind = kind
        self.n = n
        self.m = m
        self.D = D
        self.field = field or QQ
        if kind == GR:
            self.basis = _gr_monomials(n, m, D)
        else:
            self.basis = _fr_monomials(n, m, D)
        self.index = {b: i for i, b in enumerate(self.basis)}

    @property
    def dim(self):
        return len(self.basis)

    def mono_degree(self, mono):
        if self.kind == GR:
            return sum(len(f) for f in mono)
        return sum(sum(c) for c in mono)

    def q(self, elt):
        """The quotient map: a SparseGroupElt to a dense coefficient vector."""
        F = self.field
        out = [F.zero] * self.dim
        for key, c in elt.terms.items():
            if self.kind == GR:
                poly = magnus_tuple(_key_to_tuple(key, self.n, self.m), self.D)
                for mono, coeff in poly.coeffs.items():
                    out[self.index[mono]] = F.add(
                        out[self.index[mono]], F.of(c * coeff))
            else:
                flat = [x for col in key for x in col]
                poly = abelian_magnus(flat, self.D)
                for exp, coeff in poly.coeffs.items():
                    mono = tuple(tuple(exp[j * self.n:(j + 1) * self.n])
                                 for j in range(self.m))
                    out[self.index[mono]] = F.add(
                        out[self.index[mono]], F.of(c * coeff))
        return out


def _key_to_tuple(key, n, m):
    if isinstance(key, GrTuple):
        return key
    return GrTuple(n, m, key)


def passi_cell(kind, n, m, D, field=None):
    return PassiCell(kind, n, m, D, field)


def aug_power(cell, d):
    """The span of basis monomials of total degree >= d (the image of I^d)."""
    if not 0 <= d <= cell.D + 1:
        raise DegreeOutOfRange(f"d={d} outside 0..{cell.D + 1}")
    F = cell.field
    vecs = []
    for i, mono in enumerate(cell.basis):
        if cell.mono_degree(mono) >= d:
            v = [F.zero] * cell.dim
            v[i] = F.one
            vecs.append(v)
    return Subspace.from_vectors(F, cell.dim, vecs)


def graded_dim(cell, d):
    """dim of the degree-exactly-d piece (I^d / I^{d+1} in the cell)."""
    return sum(1 for mono in cell.basis if cell.mono_degree(mono) == d)


# ---------------------------------------------------------------------------
# diagonal elements and the polynomial ideal
# ---------------------------------------------------------------------------

def d_t_key(kind, n, d, T):
    """The tuple D^T: in block i the identity if i in T, else the zero map."""
    if kind == GR:
        words = []
        for i in range(1, d + 1):
            for j in range(1, n + 1):
                words.append(Word.gen(n, j) if i in T else Word.identity(n))
        return GrTuple(n, n * d, words)
    cols = []
    for i in range(1, d + 1):
        for j in range(n):
            if i in T:
                cols.append(tuple(1 if r == j else 0 for r in range(n)))
            else:
                cols.append((0,) * n)
    return tuple(cols)


def pi_d(kind, n, d):
    """pi^d in L(nd, n): the alternating sum over T of D^T, signs (-1)^{d-|T|}."""
    if d < 1:
        raise DegreeOutOfRange("pi_d needs d >= 1")
    terms = {}
    for r in range(d + 1):
        for T in itertools.combinations(range(1, d + 1), r):
            key = d_t_key(kind, n, d, set(T))
            terms[key] = terms.get(key, 0) + (-1) ** (d - r)
    return SparseGroupElt(kind, n, n * d, terms)


def _gr_words_upto(gens, max_len):
    """Freely reduced words over ±gens with length <= max_len, by length."""
    out = [()]
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for l in range(1, gens + 1):
                for s in (l, -l):
                    if w and w[-1] == -s:
                        continue
                    nxt.append(w + (s,))
        out.extend(nxt)
        frontier = nxt
    return out


def _gr_family(m, gens, max_total_len):
    """m-tuples of reduced words over `gens` generators, total length bounded,
    enumerated in increasing total length."""
    words = _gr_words_upto(gens, max_total_len)
    by_len = {}
    for w in words:
        by_len.setdefault(len(w), []).append(w)
    for total in range(max_total_len + 1):
        for comp in _compositions(total, m):
            if any(k not in by_len for k in comp):
                continue
            for parts in itertools.product(*[by_len[k] for k in comp]):
                yield GrTuple(gens, m,
                              tuple(Word(gens, p) for p in parts))


def _fr_family(m, gens, max_total):
    """m-tuples of integer columns in Z^gens with entries in {-1,0,1} and
    total absolute size bounded, by increasing size."""
    def cols(budget):
        outs = []
        for vals in itertools.product((-1, 0, 1), repeat=gens):
            if sum(abs(v) for v in vals) <= budget:
                outs.append(tuple(vals))
        return outs
    allcols = cols(max_total)
    for tup in itertools.product(allcols, repeat=m):
        if sum(sum(abs(v) for v in col) for col in tup) <= max_total:
            yield tup
    return


def polynomial_ideal(cell, d, word_len_bound=3, check=True):
    """The image of the polynomial ideal I^(d) in the cell, computed two ways.

    (a) the degree->=d span (augmentation characterization);
    (b) the span of q(f o pi^d) over a bounded family of f.
    Raises GenerationIncomplete if (b) fails to reach (a) at the bound.
    Returns the Subspace (a).
    """
    if d < 0 or d > cell.D + 1:
        raise DegreeOutOfRange(f"d={d}")
    F = cell.field
    target = aug_power(cell, d)
    if d == 0 or not check:
        return target
    pi = pi_d(cell.kind, cell.n, d)
    span = Subspace.zero_space(F, cell.dim)
    gens = cell.n * d
    family = (_gr_family(cell.m, gens, word_len_bound) if cell.kind == GR
              else _fr_family(cell.m, gens, word_len_bound))
    for f in family:
        if span.dim == target.dim:
            break
        felt = SparseGroupElt.single(cell.kind, gens, cell.m, f)
        vec = cell.q(compose_elts(felt, pi))
        if not span.member(vec):
            if not target.member(vec):
                raise GenerationIncomplete(
                    "generated element outside the augmentation power")
            span = span.sum(Subspace.from_vectors(F, cell.dim, [vec]))
    if span.dim != target.dim:
        raise GenerationIncomplete(
            f"family at bound {word_len_bound} spans {span.dim} "
            f"of {target.dim}")
    return target


# ---------------------------------------------------------------------------
# kappa generators
# ---------------------------------------------------------------------------

def mu_word(kind, n, letters):
    """The ordered product of generators (by index) as a support key (m=1)."""
    if kind == GR:
        w = Word.identity(n)
        for l in letters:
            w = word_mul(w, Word.gen(n, l))
        return GrTuple(n, 1, (w,))
    col = [0] * n
    for l in letters:
        col[l - 1] += 1
    return (tuple(col),)


def kappa(kind, n, d, f1, f2):
    """kappa_{S,f} = sum_T (-1)^{d-|T|} mu(f1 | f2^{-1}(T))  (m = 1).

    S is implicit as range(len(f1)); f1 maps S to generator indices, f2 maps
    S to {1..d}.  With the (-1)^{d-|T|} convention the ordered case equals
    prod_i (mu(f1|f2^{-1}(i)) - 1).
    """
    terms = {}
    s = len(f1)
    for r in range(d + 1):
        for T in itertools.combinations(range(1, d + 1), r):
            Tset = set(T)
            letters = [f1[i] for i in range(s) if f2[i] in Tset]
            key = mu_word(kind, n, letters)
            terms[key] = terms.get(key, 0) + (-1) ** (d - r)
    return SparseGroupElt(kind, n, 1, terms)


def kappa_tilde(kind, n, m, d, f1, f2, f3):
    """The tuple version: coordinate k collects the letters with f3 = k."""
    terms = {}
    s = len(f1)
    for r in range(d + 1):
        for T in itertools.combinations(range(1, d + 1), r):
            Tset = set(T)
            if kind == GR:
                words = []
                for k in range(1, m + 1):
                    letters = [f1[i] for i in range(s)
                               if f2[i] in Tset and f3[i] == k]
                    w = Word.identity(n)
                    for l in letters:
                        w = word_mul(w, Word.gen(n, l))
                    words.append(w)
                key = GrTuple(n, m, tuple(words))
            else:
                cols = []
                for k in range(1, m + 1):
                    col = [0] * n
                    for i in range(s):
                        if f2[i] in Tset and f3[i] == k:
                            col[f1[i] - 1] += 1
                    cols.append(tuple(col))
                key = tuple(cols)
            terms[key] = terms.get(key, 0) + (-1) ** (d - r)
    return SparseGroupElt(kind, n, m, terms)


def kappa_product_form(kind, n, d, f1, f2):
    """prod over i=1..d of (mu(f1|f2^{-1}(i)) - 1), as a SparseGroupElt."""
    acc = SparseGroupElt.single(kind, n, 1, mu_word(kind, n, []))
    s = len(f1)
    for i in range(1, d + 1):
        letters = [f1[j] for j in range(s) if f2[j] == i]
        factor = SparseGroupElt(kind, n, 1, {
            mu_word(kind, n, letters): 1,
            mu_word(kind, n, []): -1})
        # product in the group algebra of C_n (= composition into m=1... use
        # word concatenation on supports)
        out = {}
        for ka, ca in acc.terms.items():
            for kb, cb in factor.terms.items():
                if kind == GR:
                    key = GrTuple(n, 1, (word_mul(ka.words[0], kb.words[0]),))
                else:
                    key = (tuple(a + b for a, b in zip(ka[0], kb[0])),)
                out[key] = out.get(key, 0) + ca * cb
        acc = SparseGroupElt(kind, n, 1, out)
    return acc


def kappa_generators(cell, d, family_bound=200):
    """Materialize kappa-tilde elements and compare spans with the ideal.

    Enumerates families with |S| = d over single-letter generators; returns a
    report dict with the span comparison and the product-form identity check
    for order-preserving f2.
    """
    F = cell.field
    n, m = cell.n, cell.m
    target = aug_power(cell, d)
    span = Subspace.zero_space(F, cell.dim)
    count = 0
    complete = False
    for f1 in itertools.product(range(1, n + 1), repeat=d):
        for f2 in itertools.product(range(1, d + 1), repeat=d):
            for f3 in itertools.product(range(1, m + 1), repeat=d):
                if count >= family_bound:
                    break
                count += 1
                el = kappa_tilde(cell.kind, n, m, d, f1, f2, f3)
                vec = cell.q(el)
                if not target.member(vec):
                    return {"span_equal": False, "product_form": False,
                            "error": "kappa outside ideal"}
                if not span.member(vec):
                    span = span.sum(
                        Subspace.from_vectors(F, cell.dim, [vec]))
                if span.dim == target.dim:
                    complete = True
                    break
            if complete:
                break
        if complete:
            break
    # product form for order-preserving f2 (the identity case f2 = identity)
    product_ok = True
    for f1 in itertools.islice(
            itertools.product(range(1, n + 1), repeat=d), 16):
        f2 = tuple(range(1, d + 1))
        lhs = kappa(cell.kind, n, d, f1, f2)
        rhs = kappa_product_form(cell.kind, n, d, f1, f2)
        c1 = passi_cell(cell.kind, n, 1, cell.D, F)
        if c1.q(lhs) != c1.q(rhs) or lhs.terms != rhs.terms:
            product_ok = False
    return {"span_equal": span.dim == target.dim,
            "span_dim": span.dim, "target_dim": target.dim,
            "product_form": product_ok, "families_used": count}


# ---------------------------------------------------------------------------
# Passi monads
# ---------------------------------------------------------------------------

def _positive_tuple_basis(kind, n, m, d):
    """Group-level lifts whose Magnus images are unitriangular over the
    monomial basis: positive-letter tuples (gr) / nonnegative matrices (fr)."""
    cell_like = _gr_monomials(n, m, d) if kind == GR else _fr_monomials(n, m, d)
    if kind == GR:
        return [GrTuple(n, m, tuple(Word(n, f, reduce=False) for f in mono))
                for mono in cell_like]
    return list(cell_like)


class PassiMonadCell:
    """A Passi cell plus the change of basis to group-level lifts."""

    def __init__(self, kind, n, m, d, field):
        self.cell = PassiCell(kind, n, m, d, field)
        self.lift_keys = _positive_tuple_basis(kind, n, m, d)
        F = field
        rows = [self.cell.q(SparseGroupElt.single(kind, n, m, _as_key(k)))
                for k in self.lift_keys]
        # matrix P with P[i] = q(lift_i); unitriangular in the degree order
        self.P = Mat.from_rows(F, rows, cols=self.cell.dim) if rows \
            else Mat.zero(F, 0, 0)
        self.Pinv = _invert_unitriangular(self.P, F) if rows else None

    def coords(self, vec):
        """Coordinates over the lift basis of a monomial-coefficient vector."""
        return self.Pinv.apply(vec)


def _as_key(k):
    return k


def _invert_unitriangular(P, F):
    """Invert a square matrix (known invertible) by row reduction."""
    n = P.rows
    aug = [list(P.entries[i]) + [F.one if j == i else F.zero
                                 for j in range(n)] for i in range(n)]
    from .exactla import rref as _rref
    R, piv = _rref(Mat.from_rows(F, aug, cols=2 * n))
    inv = [[R.entries[i][n + j] for j in range(n)] for i in range(n)]
    # rows of inv express e_i in terms of rows of P: inv * P = I; we need
    # coords c with c * P = vec, i.e. c = vec * inv ... store transpose so
    # apply() works on column vectors: coords = inv^T applied to vec
    return Mat.from_rows(F, inv, cols=n).transpose()


def passi_monad(kind, d, window, field=None, mc=None):
    """The degree-d Passi monad on the window as a MonadGrid.

    Cell (m, n) is P^d(m, n); basis labels are the group-level lifts;
    composition is substitution followed by Magnus reduction.
    """
    from . import monadcore
    F = field or QQ
    win = monadcore.IndexWindow(window) if not hasattr(window, "indices") \
        else window
    pm = {}
    cells = {}
    for mm in win.indices:
        for nn in win.indices:
            pmc = PassiMonadCell(kind, nn, mm, d, F)
            pm[(mm, nn)] = pmc
            cells[(mm, nn)] = list(range(len(pmc.lift_keys)))

    def compose_fn(z, y, x, bi, bj):
        # bi indexes a lift in cell (z,y): y-tuple-ish... cell (m=z, n=y)
        gk = pm[(z, y)].lift_keys[bi]
        fk = pm[(y, x)].lift_keys[bj]
        key = compose_keys(kind, gk, fk, n=x)
        vec = pm[(z, x)].cell.q(SparseGroupElt.single(kind, x, z, key))
        coords = pm[(z, x)].coords(vec)
        return {i: c for i, c in enumerate(coords) if c != 0}

    def unit_fn(x):
        key = identity_key(kind, x)
        vec = pm[(x, x)].cell.q(SparseGroupElt.single(kind, x, x, key))
        coords = pm[(x, x)].coords(vec)
        return {i: c for i, c in enumerate(coords) if c != 0}

    return monadcore.MonadGrid.from_compose(F, win, cells, compose_fn, unit_fn)


# ---------------------------------------------------------------------------
# functor presentations and polynomial degree
# ---------------------------------------------------------------------------

class FunctorPresentation:
    """A functor on the window given by spaces and a morphism action.

    ``spaces``: dict label -> dimension; ``apply_tuple``: callable taking a
    GrTuple (for gr) or matrix key (for fr) representing a morphism x -> y
    (i.e. an element of the (y, x) cell) and returning a Mat from F(x) to
    F(y).  Functoriality is sample-checked at construction.
    """

    def __init__(self, kind, window_labels, spaces, apply_key, field=None,
                 check_samples=()):
        self.kind = kind
        self.labels = tuple(window_labels)
        self.spaces = dict(spaces)
        self.apply_key = apply_key
        self.field = field or QQ
        for (g, f) in check_samples:
            gf = compose_keys(kind, g, f)
            lhs = self.apply_key(gf)
            rhs = self.apply_key(g).mul(self.apply_key(f))
            if lhs != rhs:
                raise ValueError("functoriality sample failed")

    def dim(self, x):
        return self.spaces[x]

    def apply_elt(self, elt):
        """Linear extension of apply_key to a SparseGroupElt."""
        F = self.field
        mat = None
        for key, c in elt.terms.items():
            m = self.apply_key(key)
            scaled = Mat(F, m.rows, m.cols,
                         [[F.mul(F.of(c), e) for e in row]
                          for row in m.entries])
            if mat is None:
                mat = scaled
            else:
                mat = Mat(F, mat.rows, mat.cols,
                          [[F.add(a, b) for a, b in zip(r1, r2)]
                           for r1, r2 in zip(mat.entries, scaled.entries)])
        return mat


def degree_operator_kernel(Fp, d, x):
    """Kernel at label x of the degree-d test operator (pi^{d+1} action)."""
    target = x * (d + 1)
    if target not in Fp.spaces:
        raise WindowTooSmall(
            f"degree check at {x} needs label {target} in the window")
    pi = pi_d(Fp.kind, x, d + 1) if x > 0 else None
    if x == 0:
        # pi^{d+1} on the zero object is (1-1)^{d+1} * id = 0 map unless d+1=0
        return Subspace.full(Fp.field, Fp.spaces[0])
    mat = Fp.apply_elt(pi)
    return kernel(mat)


def polynomial_degree_leq(Fp, d):
    """Is the presented functor of polynomial degree <= d on its window?

    Checks every label x with x*(d+1) inside the window; requires at least
    one checkable positive label.
    """
    checked = 0
    for x in Fp.labels:
        if x * (d + 1) in Fp.spaces:
            ker = degree_operator_kernel(Fp, d, x)
            checked += 1
            if ker.dim != Fp.spaces[x]:
                return False
    if checked == 0:
        raise WindowTooSmall("no label checkable at this degree")
    return True


def p_d_subfunctor(Fp, d):
    """P_d(F): per checkable label, the kernel subspace of the test operator."""
    out = {}
    for x in Fp.labels:
        if x * (d + 1) in Fp.spaces:
            out[x] = degree_operator_kernel(Fp, d, x)
    return out


# ---------------------------------------------------------------------------
# analyticity slices
# ---------------------------------------------------------------------------

def _difference_products(kind, n, m, deg):
    """Group-algebra elements spanning I^deg modulo I^{deg+1}: distributed
    products of single-generator augmentation differences."""
    out = []
    for letters in itertools.product(range(1, n + 1), repeat=deg):
        for slots in itertools.product(range(1, m + 1), repeat=deg):
            el = kappa_tilde(kind, n, m, deg, letters,
                             tuple(range(1, deg + 1)), slots)
            out.append(el)
    return out


def analyticity_slice(kind, nu, labels, caps=(None, None), field=None,
                      word_len_bound=3):
    """Eigenmonad cell dimensions of the nu-analyticity ideal, cap-stably.

    For each ordered pair (y, x) of labels with nu(y) >= nu(x) the idealizer
    condition ``I^{nu(y)}(z, y) o f  inside  I^{nu(x)}(z, x)`` is solved for
    f inside the Magnus model truncated at D = max nu - 1, waypoints z up to
    each cap.  Returns a report per pair with computed vs Passi dims and a
    cap_stable flag; pairs failing the hypothesis are reported as skipped.
    """
    F = field or QQ
    labels = tuple(labels)
    numax = max(nu(x) for x in labels)
    D = numax - 1
    cap1 = caps[0] if caps[0] is not None else max(labels)
    cap2 = caps[1] if caps[1] is not None else cap1 + 1
    report = []
    for y in labels:
        for x in labels:
            if nu(y) < nu(x):
                report.append({"pair": (y, x), "status": "skipped",
                               "reason": "hypothesis nu(y) >= nu(x) fails"})
                continue
            dims = []
            for cap in (cap1, cap2):
                dims.append(_analyticity_cell_dim(
                    kind, nu, y, x, cap, D, F))
            expected = PassiCell(kind, x, y, min(nu(x) - 1, D), F).dim
            report.append({"pair": (y, x), "status": "computed",
                           "computed": dims[0], "expected": expected,
                           "cap_stable": dims[0] == dims[1]})
    return report


def _analyticity_cell_dim(kind, nu, y, x, cap, D, F):
    """dim of I(I^nu)(y,x) / I^{nu(x)}(y,x) inside the D-truncated model."""
    cell = PassiCell(kind, x, y, D, F)  # morphisms x -> y: n = x, m = y
    lifts = _positive_tuple_basis(kind, x, y, D)
    dim = len(lifts)
    rows = []
    for z in range(cap + 1):
        if nu(y) > D:
            # I^{nu(y)}(z,y) is zero in the model; no conditions from z
            continue
        target_cell = PassiCell(kind, x, z, D, F)
        low = nu(x)
        low_idx = [i for i, mono in enumerate(target_cell.basis)
                   if target_cell.mono_degree(mono) < low]
        if not low_idx:
            continue
        spanning = []
        for deg in range(nu(y), D + 1):
            spanning.extend(_difference_products(kind, y, z, deg))
        for u in spanning:
            cols = []
            for lk in lifts:
                felt = SparseGroupElt.single(kind, x, y, lk)
                comp = compose_elts(u, felt)
                vec = target_cell.q(comp)
                cols.append([vec[i] for i in low_idx])
            for ci in range(len(low_idx)):
                row = [cols[i][ci] for i in range(dim)]
                if any(c != 0 for c in row):
                    rows.append(row)
    if rows:
        sol = kernel(Mat.from_rows(F, rows, cols=dim))
        idim = sol.dim
    else:
        idim = dim
    # subtract dim of J(y,x) = I^{nu(x)}(y,x) inside the model cell
    jdim = sum(1 for mono in cell.basis if cell.mono_degree(mono) >= nu(x))
    return idim - jdim


def filtration_witness(kind, D, field=None):
    """dims of I^d/I^{d+1} at cell (1,1) for d <= D (all 1: (t-1)^d spans)."""
    F = field or QQ
    cell = PassiCell(kind, 1, 1, D, F)
    return [graded_dim(cell, d) for d in range(D + 1)]
